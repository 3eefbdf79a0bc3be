//! The `ellgen` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::bundleops::{composite_closed_form, graded_decompose, gch_from_table, schur, virtual_rank, DecompositionKind};
use crate::error::{Error, Result};
use crate::genera::{cancellation12_check_with, compute, pell, ChernReading, GenusKind, Method, Normalization};
use crate::manifest::{resolve_order, Manifest};
use crate::modcheck::{self, Check, SL2Matrix};
use crate::qseries::half_power;
use crate::report::{fmt_residual, Report};
use crate::theta;

#[derive(Parser, Debug)]
#[command(name = "ellgen", version, about = "Projective elliptic genera with exact rational q-series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute a genus as a q-series table.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        genus: GenusArg,
        #[arg(long, default_value = "theta")]
        method: MethodArg,
        /// Order in powers of q^{1/2}.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value = "theta")]
        normalization: NormArg,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exit 1 if any check fails.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Comma-separated sample points such as `1.1i,0.3+1.2i`.
        #[arg(long)]
        tau: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the graded decomposition table of a composite bundle.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        kind: KindArg,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Degree-12 anomaly cancellation check on the free power-sum ring.
    Cancel12 {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        no_relation: bool,
        #[arg(long, default_value = "complexified")]
        reading: ReadingArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenusArg {
    Ahat,
    Witten,
    Pell,
    Pell1,
    Pell2,
    Pell3,
}

impl From<GenusArg> for GenusKind {
    fn from(g: GenusArg) -> Self {
        match g {
            GenusArg::Ahat => GenusKind::AHat,
            GenusArg::Witten => GenusKind::Witten,
            GenusArg::Pell => GenusKind::PEll,
            GenusArg::Pell1 => GenusKind::PEll1,
            GenusArg::Pell2 => GenusKind::PEll2,
            GenusArg::Pell3 => GenusKind::PEll3,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Theta,
    Definition,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum NormArg {
    Theta,
    Literal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ReadingArg {
    Complexified,
    Literal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    #[value(name = "W")]
    W,
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ThetaLaws,
    Consistency,
    HalfPeriod,
    STransform,
    Jacobi,
    Schur,
}

/// Parses `1.1i`, `0.3+1.2i`, `-0.2+0.9i`, `i`, `2`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Input(format!("cannot parse complex number `{s}`"));
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|x| Complex64::new(x, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not a leading sign or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re.parse::<f64>().map_err(|_| bad())?, im))
}

pub fn parse_tau_list(s: &str) -> Result<Vec<Complex64>> {
    let taus = s.split(',').map(parse_complex).collect::<Result<Vec<_>>>()?;
    if let Some(t) = taus.iter().find(|t| t.im <= 0.0) {
        return Err(Error::InvalidTau(t.im));
    }
    Ok(taus)
}

/// Runs the CLI on `args` (without the program name), writing to `out`, and
/// returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("ellgen")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Input(format!("write failed: {e}")))
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Compute { input, genus, method, order, normalization, json } => {
            let man = Manifest::load(&input)?;
            let n = resolve_order(order, man.order)?;
            let method = match method {
                MethodArg::Theta => Method::Theta,
                MethodArg::Definition => Method::Definition,
            };
            let norm = match normalization {
                NormArg::Theta => Normalization::ThetaQuotient,
                NormArg::Literal => Normalization::Literal,
            };
            let g = compute(genus.into(), &man.manifold, man.bundle.as_ref(), method, n, norm)?;
            let r = Report::from_genus(&g);
            emit(out, &if json { r.to_json() + "\n" } else { r.to_text() })?;
            Ok(0)
        }
        Command::Verify { suite, input, order, tol, tau, json } => {
            let taus = tau.as_deref().map(parse_tau_list).transpose()?;
            let man = input.as_deref().map(Manifest::load).transpose()?;
            let n = resolve_order(order, man.as_ref().and_then(|m| m.order))?;
            let checks = run_suite(suite, man.as_ref(), n, tol, taus)?;
            let name = format!("verify:{}", suite.to_possible_value().expect("named").get_name());
            let r = Report::from_checks(name, &checks);
            emit(out, &if json { r.to_json() + "\n" } else { r.to_text() })?;
            Ok(if r.all_passed() { 0 } else { 1 })
        }
        Command::Decompose { input, kind, order } => {
            let man = Manifest::load(&input)?;
            let n = resolve_order(order, man.order)?;
            let kind = match kind {
                KindArg::W => DecompositionKind::W,
                KindArg::A => DecompositionKind::A,
                KindArg::B => DecompositionKind::B,
                KindArg::C => DecompositionKind::C,
            };
            let (text, ok) = decompose_text(&man, kind, n)?;
            emit(out, &text)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Cancel12 { rank, no_relation, reading } => {
            let reading = match reading {
                ReadingArg::Complexified => ChernReading::Complexified,
                ReadingArg::Literal => ChernReading::Literal,
            };
            let c = cancellation12_check_with(rank, !no_relation, reading)?;
            let mut text = String::new();
            if c.equal {
                text.push_str("equal: yes\n");
            } else if c.divisible() {
                text.push_str("equal: no; residual ∝ (s2^T − s2^E)\n");
            } else {
                text.push_str("equal: no; residual not divisible by (s2^T − s2^E)\n");
            }
            if !c.equal {
                text.push_str(&format!("residual: {}\n", c.residual));
                if c.divisible() {
                    text.push_str(&format!("quotient: {}\n", c.quotient));
                }
            }
            emit(out, &text)?;
            Ok(if c.equal || no_relation { 0 } else { 1 })
        }
    }
}

fn need_bundle(man: Option<&Manifest>, suite: &str) -> Result<(crate::cohring::Manifold, crate::bundleops::ProjBundle)> {
    let man = man.ok_or_else(|| Error::Input(format!("suite {suite} needs --input")))?;
    Ok((man.manifold.clone(), man.bundle()?.clone()))
}

fn exact_check(name: String, ok: bool) -> Check {
    Check::new(name, ok, if ok { 0.0 } else { 1.0 }, "")
}

/// The checks of one verification suite.
pub fn run_suite(suite: Suite, man: Option<&Manifest>, order: usize, tol: f64, taus: Option<Vec<Complex64>>) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::ThetaLaws => {
            let mut samples = modcheck::default_theta_samples();
            if let Some(ts) = taus {
                let vs: Vec<Complex64> = samples.iter().map(|s| s.0).collect();
                samples = ts.iter().enumerate().map(|(k, &t)| (vs[k % vs.len()], t)).collect();
            }
            modcheck::theta_law_suite(&samples, tol)?
        }
        Suite::Jacobi => vec![exact_check(format!("jacobi identity through u^{order}"), theta::jacobi_identity_exact(order))],
        Suite::Schur => {
            let mut out = Vec::new();
            for ru in 1..=3 {
                for rv in 1..=3 {
                    for n in 0..=4.min(ru * rv) {
                        let ok = schur::tensor_exterior_identity_check(ru, rv, n)?;
                        out.push(exact_check(format!("Lambda^{n}(U{ru} (x) V{rv})"), ok));
                    }
                }
            }
            out
        }
        Suite::Consistency => {
            let (m, e) = need_bundle(man, "consistency")?;
            let mut out = Vec::new();
            for norm in [Normalization::ThetaQuotient, Normalization::Literal] {
                for kind in GenusKind::PROJECTIVE {
                    let a = pell(&m, &e, kind, Method::Theta, order, norm)?.series;
                    let b = pell(&m, &e, kind, Method::Definition, order, norm)?.series;
                    out.push(exact_check(format!("{kind} theta_product == definition ({})", norm.name()), a == b));
                }
            }
            out
        }
        Suite::HalfPeriod => {
            let (m, e) = need_bundle(man, "half-period")?;
            let p2 = pell(&m, &e, GenusKind::PEll2, Method::Theta, order, Normalization::default())?.series;
            let p3 = pell(&m, &e, GenusKind::PEll3, Method::Theta, order, Normalization::default())?.series;
            vec![exact_check("pell2(tau+1) == pell3(tau)".into(), modcheck::check_t_exact(&p2, Some(&p3)))]
        }
        Suite::STransform => {
            let (m, e) = need_bundle(man, "s-transform")?;
            let taus = taus.unwrap_or_else(modcheck::default_samples);
            s_transform_checks(&m, &e, order, tol, &taus)?
        }
    })
}

/// The pair relation under `S` plus each genus's own group check. Failures
/// to evaluate, such as a tail bound above the tolerance, become failed rows.
pub fn s_transform_checks(m: &crate::cohring::Manifold, e: &crate::bundleops::ProjBundle, order: usize, tol: f64, taus: &[Complex64]) -> Result<Vec<Check>> {
    let norm = Normalization::default();
    let weight = 2 * m.r() as i32;
    let reports = GenusKind::PROJECTIVE
        .iter()
        .map(|&k| pell(m, e, k, Method::Theta, order, norm))
        .collect::<Result<Vec<_>>>()?;
    let (p1, p2) = (&reports[1].series, &reports[2].series);
    let mut out = Vec::new();
    let as_row = |name: String, r: Result<(bool, f64, String)>| match r {
        Ok((ok, dev, detail)) => Check::new(name, ok, dev, detail),
        Err(err) => Check::new(name, false, f64::INFINITY, format!("not evaluated: {err}")),
    };
    let pair = modcheck::check_pair(p1, p2, SL2Matrix::S, weight, taus, tol, 0.0).map(|r| {
        let best = modcheck::best_q_power(p1, p2, SL2Matrix::S, weight, taus, tol)
            .map(|(c, d)| format!("best q-power {c:.4} (deviation {})", fmt_residual(d)))
            .unwrap_or_default();
        (r.passed, r.max_deviation, best)
    });
    out.push(as_row(format!("pell1(-1/tau) == tau^{weight} pell2(tau)"), pair));
    for rep in &reports {
        let Some(group) = rep.group else { continue };
        let g = modcheck::check_group(&rep.series, group, weight, taus, tol).map(|g| {
            let dev = g.generators.iter().map(|(_, r)| r.max_deviation).fold(0.0, f64::max);
            let chis: Vec<String> = g
                .generators
                .iter()
                .map(|(w, r)| match r.chi {
                    Some(c) => format!("chi({w}) = {:.6}{:+.6}i", c.re, c.im),
                    None => format!("chi({w}) = n/a (series vanishes)"),
                })
                .collect();
            (g.passed(), dev, chis.join(", "))
        });
        out.push(as_row(format!("{} weight {weight} over {group}", rep.kind), g));
    }
    Ok(out)
}

fn leading_class(c: &crate::cohring::CohElement, top: u32) -> String {
    (1..=top / 2)
        .map(|d| c.component(2 * d))
        .find(|x| !x.is_zero())
        .map(|x| x.format())
        .unwrap_or_else(|| "0".into())
}

pub fn decompose_text(man: &Manifest, kind: DecompositionKind, order: usize) -> Result<(String, bool)> {
    let e = man.bundle()?;
    let m = &man.manifold;
    let table = graded_decompose(kind, e, order, m)?;
    let mut text = format!("kind: {}\nbundle: {}\norder: {order}\n", kind.name(), e.describe(m));
    for p in 0..=order {
        for w in table.weights_at(p) {
            let c = table.entry(w, p).expect("listed weight");
            text.push_str(&format!(
                "n={} m={w}: rank {}, leading {}\n",
                half_power(p),
                crate::qseries::fmt_rational(&virtual_rank(c)),
                leading_class(c, m.dimension())
            ));
        }
    }
    let ok = gch_from_table(&table, m) == composite_closed_form(kind, e, order, m)?;
    text.push_str(&format!("gch == closed form: {}\n", if ok { "yes" } else { "no" }));
    Ok((text, ok))
}
