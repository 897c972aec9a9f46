//! The `hw` command line: argument handling, dispatch and report output.
//!
//! Every command builds a [`Report`]; the exit status is 0 when every check
//! passed, 1 when a check failed and 2 on usage or parse errors.

pub mod parse;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{BasisIndex, Element};
use crate::error::Error;
use crate::fusion::{hw_law, monster_law, verify_axis, FusionReport};
use crate::jordan::{self, BaricAlgebraSpec};
use crate::sampling;
use crate::scalar::Field;
use crate::spectral::{ad_matrix_4, char_poly_ad4, decompose, expected_spectrum_polynomial, Axis, EigenPart};
use crate::structure::{ideal_closure, subalgebra_closure};
use crate::symmetry::{
    apply_dihedral, basis_pairs, check_automorphism, check_v_automorphism, orbit_order,
    probe_extension, v_basis, v_psi, v_rho, v_theta, DihedralElement, VInvolution,
};

use self::parse::{parse_element, split_list};

#[derive(Debug, Parser)]
#[command(name = "hw", about = "Exact computations in the highwater algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// `q` for the rationals, `gf:p` for a prime field
    #[arg(long, global = true, default_value = "q")]
    field: Field,

    #[arg(long, global = true, default_value_t = 0, allow_negative_numbers = true)]
    axis: i64,

    #[arg(long, global = true, default_value_t = 8)]
    window: u64,

    #[arg(long, global = true, default_value_t = 10)]
    sweeps: usize,

    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = LawChoice::Hw)]
    law: LawChoice,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LawChoice {
    Hw,
    Monster,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an element expression and print it in canonical form
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Split an element into its a-, u-, v- and w-parts relative to an axis
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check the fusion law on the eigenbasis of an axis
    FusionVerify,
    /// Check that a map is multiplicative on basis pairs
    AutCheck {
        /// tau | pi | translate:t | reflect:t | rho | theta | psi
        #[arg(long)]
        map: String,
    },
    /// Dimension growth of a generated subalgebra
    Closure {
        #[arg(long)]
        gens: String,
    },
    /// Span of the ideal generated by elements, under windowed multipliers
    Ideal {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        probe: Option<String>,
    },
    /// Characteristic-3 Jordan checks (Jordan identity only in other characteristics)
    JordanVerify,
    /// Build a random baric algebra A ⊕ I and check the Jordan identity
    BaricBuild {
        #[arg(long = "dimA")]
        dim_a: usize,
        #[arg(long = "dimI")]
        dim_i: usize,
    },
    /// Characteristic polynomial of ad(a_0) on <a_0, a_-j, a_j, s_j>
    CharPoly {
        #[arg(long, default_value_t = 1)]
        index: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Line {
    check: String,
    status: Option<bool>,
    detail: String,
}

/// Ordered report lines; `status` is `None` for informational lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<Line>,
}

impl Report {
    fn info(&mut self, check: impl Into<String>, detail: impl Into<String>) {
        self.lines.push(Line { check: check.into(), status: None, detail: detail.into() });
    }

    fn verdict(&mut self, check: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.lines.push(Line { check: check.into(), status: Some(passed), detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != Some(false))
    }

    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for l in &self.lines {
            match format {
                Format::Json => {
                    let status = match l.status {
                        None => "info",
                        Some(true) => "pass",
                        Some(false) => "fail",
                    };
                    let obj = json!({ "check": l.check, "status": status, "detail": l.detail });
                    writeln!(out, "{obj}").unwrap();
                }
                Format::Text => match l.status {
                    None if l.check.is_empty() => writeln!(out, "{}", l.detail).unwrap(),
                    None => writeln!(out, "{}: {}", l.check, l.detail).unwrap(),
                    Some(p) => writeln!(
                        out,
                        "{} {}: {}",
                        if p { "PASS" } else { "FAIL" },
                        l.check,
                        l.detail
                    )
                    .unwrap(),
                },
            }
        }
        out
    }
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<parse::ParseError> for Failure {
    fn from(e: parse::ParseError) -> Self {
        Failure::Usage(format!("parse error {e}"))
    }
}

/// Runs `hw` with `argv` (including the program name).
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandOutput { status: 0, stdout: text, stderr: String::new() }
                }
                _ => CommandOutput { status: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    match dispatch(&cli) {
        Ok(report) => CommandOutput {
            status: if report.passed() { 0 } else { 1 },
            stdout: report.render(cli.format),
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => CommandOutput {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let field = cli.field;
    let mut r = Report::default();
    match &cli.command {
        Command::Eval { expr } => {
            r.info("", parse_element(expr, field)?.to_string());
        }
        Command::Decompose { expr } => decompose_cmd(&mut r, &parse_element(expr, field)?, Axis(cli.axis)),
        Command::FusionVerify => {
            let law = match cli.law {
                LawChoice::Hw => hw_law(field),
                LawChoice::Monster => monster_law(&field.ratio(2, 1), &field.ratio(1, 2))?,
            };
            r.info("law", law.name());
            let report = verify_axis(Axis(cli.axis), &law, cli.window)?;
            fusion_cmd(&mut r, &report);
        }
        Command::AutCheck { map } => aut_cmd(&mut r, map, cli.window, field)?,
        Command::Closure { gens } => {
            let gens = parse_list(gens, field)?;
            let st = subalgebra_closure(&gens, cli.sweeps)?;
            for (k, d) in st.dims.iter().enumerate() {
                r.info(format!("sweep {k}"), format!("dim {d}"));
            }
            r.info("stable", st.stable.to_string());
            let members: Vec<String> = BasisIndex::window(3)
                .into_iter()
                .filter(|&b| st.contains(&Element::basis(b, field)))
                .map(|b| b.to_string())
                .collect();
            r.info("basis vectors in span (|i|, j <= 3)", members.join(" "));
        }
        Command::Ideal { gens, probe } => {
            let gens = parse_list(gens, field)?;
            let st = ideal_closure(&gens, cli.window, cli.sweeps)?;
            for (k, d) in st.dims.iter().enumerate() {
                r.info(format!("sweep {k}"), format!("dim {d}"));
            }
            r.info("stable", st.stable.to_string());
            if let Some(p) = probe {
                let x = parse_element(p, field)?;
                let verdict = if st.contains(&x) { "in ideal" } else { "not in ideal" };
                r.info(format!("probe {x}"), verdict);
            }
        }
        Command::JordanVerify => jordan_cmd(&mut r, cli.window, cli.trials, cli.seed, field)?,
        Command::BaricBuild { dim_a, dim_i } => {
            baric_cmd(&mut r, *dim_a, *dim_i, cli.trials, cli.seed, field)?
        }
        Command::CharPoly { index } => {
            let m = ad_matrix_4(*index, field)?;
            for (row, label) in m.iter().zip(["a(0)", "a(-j)", "a(j)", "s(j)"]) {
                let cells: Vec<String> = row.iter().map(|c| c.coefficient_text()).collect();
                r.info(format!("ad row {label}"), cells.join(" "));
            }
            let p = char_poly_ad4(*index, field)?;
            r.info("characteristic polynomial", p.to_string());
            r.verdict(
                "factorization",
                p == expected_spectrum_polynomial(field),
                "(x - 1) x (x - 2) (x - 1/2)",
            );
        }
    }
    Ok(r)
}

fn parse_list(text: &str, field: Field) -> Result<Vec<Element>, Failure> {
    split_list(text)
        .into_iter()
        .map(|g| parse_element(g, field).map_err(Failure::from))
        .collect()
}

fn decompose_cmd(r: &mut Report, x: &Element, axis: Axis) {
    let d = decompose(x, axis);
    let field = x.field();
    for part in EigenPart::ALL {
        let label = format!("{part} (eigenvalue {})", part.eigenvalue(field).coefficient_text());
        r.info(label, d.component(part).to_string());
    }
}

fn fusion_cmd(r: &mut Report, report: &FusionReport) {
    let field = report.field;
    let mut classes: BTreeMap<(EigenPart, EigenPart), (usize, usize)> = BTreeMap::new();
    let part_of = |label: &str| match label.chars().next() {
        Some('u') => EigenPart::U,
        Some('v') => EigenPart::V,
        Some('w') => EigenPart::W,
        _ => EigenPart::One,
    };
    for p in &report.pairs {
        let e = classes.entry((part_of(&p.left), part_of(&p.right))).or_default();
        e.0 += 1;
        if !p.check.passed() {
            e.1 += 1;
        }
    }
    for ((l, rr), (n, bad)) in &classes {
        let name = format!(
            "{l}*{rr} ({} * {})",
            l.eigenvalue(field).coefficient_text(),
            rr.eigenvalue(field).coefficient_text()
        );
        r.verdict(name, *bad == 0, format!("{} of {n} pairs", n - bad));
    }
    for p in report.failures() {
        let offending: Vec<String> = p
            .check
            .offending
            .iter()
            .map(|(part, ev)| format!("{part}-part (eigenvalue {})", ev.coefficient_text()))
            .collect();
        let d = &p.check.decomposition;
        let parts: Vec<String> = EigenPart::ALL
            .iter()
            .map(|&part| format!("{part}: {}", d.component(part)))
            .collect();
        r.verdict(
            format!("{}*{}", p.left, p.right),
            false,
            format!("forbidden {}; product parts {}", offending.join(", "), parts.join("; ")),
        );
    }
    let prim = &report.primitivity;
    r.verdict(
        "primitivity",
        prim.passed(),
        format!("1-eigenspace has dimension {} in a window of dimension {}", prim.one_eigenspace_dim, prim.ambient_dim),
    );
    r.verdict(
        "summary",
        report.all_passed(),
        format!("axis {}, window {}, field {}, {} pairs", report.axis.0, report.window, field, report.pairs.len()),
    );
}

fn parse_dihedral(map: &str) -> Option<DihedralElement> {
    match map {
        "tau" => Some(DihedralElement::tau()),
        "pi" => Some(DihedralElement::pi()),
        _ => {
            let (kind, t) = map.split_once(':')?;
            let t: i64 = t.trim().parse().ok()?;
            match kind {
                "translate" => Some(DihedralElement::translate(t)),
                "reflect" => Some(DihedralElement::reflect(t)),
                _ => None,
            }
        }
    }
}

fn aut_cmd(r: &mut Report, map: &str, window: u64, field: Field) -> Result<(), Failure> {
    if let Some(g) = parse_dihedral(map) {
        let pairs = basis_pairs(window, field);
        let check = check_automorphism(|x| apply_dihedral(g, x), &pairs);
        r.verdict(
            format!("{map} ({g})"),
            check.holds(),
            format!(
                "{} of {} basis pairs with |i|, j <= {window}",
                check.pairs_checked - check.failures.len(),
                check.pairs_checked
            ),
        );
        return Ok(());
    }
    let inv = match map {
        "rho" => VInvolution::Rho,
        "theta" => VInvolution::Theta,
        "psi" => VInvolution::Psi,
        _ => return Err(Failure::Usage(format!("unknown map {map:?}"))),
    };
    let check = check_v_automorphism(inv, window, field);
    r.verdict(
        format!("{map} multiplicative on V"),
        check.holds(),
        format!(
            "{} of {} pairs c_i, s_j with i, j <= {window}",
            check.pairs_checked - check.failures.len(),
            check.pairs_checked
        ),
    );
    let basis = v_basis(window, field);
    let involutive = basis.iter().all(|x| inv.apply(&inv.apply(x)) == *x);
    r.verdict(format!("{map} is an involution"), involutive, format!("on {} basis vectors", basis.len()));
    if inv == VInvolution::Psi {
        let conj = basis.iter().all(|x| v_psi(&v_rho(&v_psi(x))) == v_theta(x));
        r.verdict("psi rho psi = theta", conj, format!("on {} basis vectors", basis.len()));
        let orders: Vec<Option<usize>> =
            basis.iter().map(|x| orbit_order(|y| v_rho(&v_psi(y)), x, 16)).collect();
        let order: Option<usize> =
            orders.iter().try_fold(1usize, |acc, o| o.map(|o| num_integer::Integer::lcm(&acc, &o)));
        let detail = match order {
            Some(n) => format!("order {n}, expected 4; <rho, psi> has order {}", 2 * n),
            None => "no finite order found up to 16".to_string(),
        };
        r.verdict("order of rho psi", order == Some(4), detail);
    }
    for sign in [1, -1] {
        let probe = probe_extension(inv, sign, window.min(4), field);
        r.info(
            format!("extension fixing a, w -> {}w", if sign == 1 { "" } else { "-" }),
            if probe.holds() {
                "multiplicative on the probed pairs".to_string()
            } else {
                format!("not multiplicative ({} of {} pairs fail)", probe.failures.len(), probe.pairs_checked)
            },
        );
    }
    Ok(())
}

const SAMPLE_SUPPORT: usize = 10;

fn jordan_cmd(r: &mut Report, window: u64, trials: usize, seed: u64, field: Field) -> Result<(), Failure> {
    let mut rng = sampling::rng(seed);
    if field.is_char3() {
        r.verdict(
            "sigma_j annihilates the window",
            jordan::char3_sigma_annihilation_check(window, field)?,
            format!("j, |i| <= {window}"),
        );
        let mut ok = true;
        for i in 1..=window {
            for j in 1..=window {
                ok &= jordan::char3_vw_product(i, j, field).is_ok();
                ok &= jordan::char3_w_product(i, j, field).is_ok();
            }
        }
        r.verdict("v_i w_j = 0, w_i w_j = (u_|i-j| - u_i+j)/2", ok, format!("i, j <= {window}"));
    }
    let mut jordan_ok = 0;
    for _ in 0..trials {
        let x = sampling::element(&mut rng, field, SAMPLE_SUPPORT, window);
        let y = sampling::element(&mut rng, field, SAMPLE_SUPPORT, window);
        jordan_ok += usize::from(jordan::jordan_identity_check(&x, &y)?);
    }
    r.verdict("jordan identity x(yx^2) = (xy)x^2", jordan_ok == trials, format!("{jordan_ok} of {trials} random pairs"));
    if field.is_char3() {
        let mut apart_ok = 0;
        for _ in 0..trials {
            let x = sampling::a_element(&mut rng, field, SAMPLE_SUPPORT, window);
            let y = sampling::a_element(&mut rng, field, SAMPLE_SUPPORT, window);
            apart_ok += usize::from(jordan::a_part_product_check(&x, &y)?);
        }
        r.verdict(
            "a(xy) = l(y)/2 x + l(x)/2 y",
            apart_ok == trials,
            format!("{apart_ok} of {trials} random pairs"),
        );
    }
    Ok(())
}

fn baric_cmd(
    r: &mut Report,
    dim_a: usize,
    dim_i: usize,
    trials: usize,
    seed: u64,
    field: Field,
) -> Result<(), Failure> {
    let mut rng = sampling::rng(seed);
    let spec = BaricAlgebraSpec::random(dim_a, dim_i, field, &mut rng);
    let b = jordan::baric_jordan_build(&spec)?;
    let omega: Vec<String> = spec.omega.iter().map(|c| c.coefficient_text()).collect();
    r.info("dimensions", format!("A = {dim_a}, I = {dim_i}, field {field}"));
    r.info("omega", omega.join(" "));
    r.verdict("I B = 0", b.check_ideal_annihilates(), "on basis pairs");
    r.verdict("ab - (w(b)a + w(a)b)/2 in I", b.check_condition_c(), "on basis pairs of A");
    r.verdict("weight is multiplicative", b.check_weight_homomorphism(), "on basis pairs");
    let mut ok = 0;
    for _ in 0..trials {
        let x = b.random_vector(&mut rng);
        let y = b.random_vector(&mut rng);
        ok += usize::from(b.jordan_identity(&x, &y));
    }
    r.verdict("jordan identity", ok == trials, format!("{ok} of {trials} random pairs"));
    Ok(())
}
