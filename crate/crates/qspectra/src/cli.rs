//! Command-line surface. Subcommands build families, print exact spectra
//! and invariants, enumerate isomorphism classes, hunt cospectral mates,
//! verify theorem instances, and query the determination registry.
//!
//! Exit codes: 0 success/pass, 1 not-determined/fail, 2 usage or scope
//! errors. Payload lines are deterministic for fixed flags.

use crate::cache::CacheRecord;
use crate::enumerate::Enumerator;
use crate::families::FamilySpec;
use crate::graph6::{decode_graph6, encode_graph6};
use crate::lab::{self, registry_lookup, verify_theorem, HuntConfig, MateReport, TheoremId};
use crate::spectra::{charpoly, q_invariants, MatrixKind};
use crate::{Error, Result};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use std::io::Write;
use std::path::PathBuf;

/// Environment variable naming the directory for relative `--out` paths.
pub const CACHE_DIR_ENV: &str = "QSPECTRA_CACHE_DIR";

#[derive(Parser)]
#[command(
    name = "qspectra",
    about = "Exact signless-Laplacian spectra and cospectral-mate hunting for small graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named family and print its graph6 form and counts.
    Family {
        /// Family text, e.g. "lollipop(11,6)" or the shorthand "K4".
        spec: String,
    },
    /// Exact characteristic polynomial and isolated root multiset.
    Spectrum {
        graph6: String,
        #[arg(long, default_value = "Q")]
        matrix: String,
    },
    /// The spectral invariant bundle as key=value lines.
    Invariants { graph6: String },
    /// Enumerate all isomorphism classes of one order, graph6 per line.
    Enumerate {
        n: usize,
        /// Keep only graphs with exactly this many edges.
        #[arg(long)]
        edges: Option<usize>,
        /// Also write a cache file with polynomials and digests.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hunt for cospectral mates of a graph over its full order.
    Hunt {
        graph6: String,
        #[arg(long, default_value = "Q")]
        matrix: String,
        /// Worker threads for the enumeration.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Verify a theorem instance: hypotheses plus claimed determination.
    Verify {
        #[arg(long)]
        theorem: String,
        /// Instance parameters, e.g. "G=K4,r=1" or "T=path(5),r=1".
        #[arg(long)]
        params: String,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Which registered determination claims cover this graph?
    Registry { graph6: String },
}

/// Run with explicit argv and output sinks; returns the exit code.
pub fn run_cli<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli.cmd) {
        Ok((text, code)) => {
            let _ = write!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Hypothesis { .. } => 1,
                _ => 2,
            }
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<(String, i32)> {
    match cmd {
        Cmd::Family { spec } => cmd_family(&spec),
        Cmd::Spectrum { graph6, matrix } => cmd_spectrum(&graph6, &matrix),
        Cmd::Invariants { graph6 } => cmd_invariants(&graph6),
        Cmd::Enumerate { n, edges, out } => cmd_enumerate(n, edges, out),
        Cmd::Hunt {
            graph6,
            matrix,
            jobs,
        } => cmd_hunt(&graph6, &matrix, jobs),
        Cmd::Verify {
            theorem,
            params,
            jobs,
        } => cmd_verify(&theorem, &params, jobs),
        Cmd::Registry { graph6 } => cmd_registry(&graph6),
    }
}

fn parse_matrix(text: &str) -> Result<MatrixKind> {
    text.parse().map_err(|reason| Error::FamilyParse {
        input: text.to_string(),
        reason,
    })
}

fn cmd_family(spec: &str) -> Result<(String, i32)> {
    let spec: FamilySpec = spec.parse()?;
    let g = spec.build()?;
    let mut text = String::new();
    text.push_str(&encode_graph6(&g)?);
    text.push('\n');
    text.push_str(&format!("n={} m={}\n", g.order(), g.size()));
    Ok((text, 0))
}

fn cmd_spectrum(graph6: &str, matrix: &str) -> Result<(String, i32)> {
    let g = decode_graph6(graph6)?;
    let kind = parse_matrix(matrix)?;
    let p = charpoly(&g, kind);
    let mut text = format!("matrix={}\npoly={}\n", kind.letter(), p.to_coeff_text());
    let roots: Vec<String> = p
        .isolated_roots()
        .iter()
        .flat_map(|r| std::iter::repeat_n(root_decimal(r), r.multiplicity))
        .collect();
    text.push_str(&format!("roots={}\n", roots.join(",")));
    Ok((text, 0))
}

/// Deterministic decimal rendering of an isolated root: exact integers
/// verbatim, anything else as a six-decimal approximation refined by
/// rational bisection (no floating point involved).
fn root_decimal(root: &crate::poly::RootInterval) -> String {
    if let Some(exact) = &root.exact {
        if exact.is_integer() {
            return exact.numer().to_string();
        }
        return decimal_6(exact);
    }
    let mut r = root.clone();
    let width = BigRational::new(BigInt::from(1), BigInt::from(100_000_000u64));
    r.refine(&width);
    if let Some(exact) = &r.exact {
        if exact.is_integer() {
            return exact.numer().to_string();
        }
        return decimal_6(exact);
    }
    let two = BigRational::from_integer(2.into());
    decimal_6(&((&r.lo + &r.hi) / two))
}

/// Round-to-nearest fixed six decimals, computed in exact arithmetic.
fn decimal_6(x: &BigRational) -> String {
    let scale = BigInt::from(1_000_000u64);
    let scaled = x * BigRational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let neg = rounded.is_negative();
    let abs = rounded.abs();
    let int_part = &abs / &scale;
    let frac_part = &abs % &scale;
    format!(
        "{}{}.{:06}",
        if neg { "-" } else { "" },
        int_part,
        frac_part
    )
}

fn cmd_invariants(graph6: &str) -> Result<(String, i32)> {
    let g = decode_graph6(graph6)?;
    let inv = q_invariants(&g);
    let mut text = String::new();
    text.push_str(&format!("n={}\n", inv.n));
    text.push_str(&format!("m={}\n", inv.m));
    let t = inv.power_sums.as_array();
    for (k, v) in t.iter().enumerate() {
        text.push_str(&format!("t{k}={v}\n"));
    }
    text.push_str(&format!("det_q={}\n", inv.det_q));
    text.push_str(&format!("p_q={}\n", inv.p_q));
    text.push_str(&format!("p_l={}\n", inv.p_l));
    text.push_str(&format!("zero_mult_q={}\n", inv.zero_mult_q));
    if let Some(tau) = &inv.spanning_trees {
        text.push_str(&format!("spanning_trees={tau}\n"));
    }
    Ok((text, 0))
}

fn cmd_enumerate(n: usize, edges: Option<usize>, out: Option<PathBuf>) -> Result<(String, i32)> {
    let mut enumerator = Enumerator::new(n)?;
    if let Some(m) = edges {
        enumerator = enumerator.edges_exactly(m);
    }
    let graphs = enumerator.collect();
    let mut text = String::new();
    for g in &graphs {
        text.push_str(&encode_graph6(g)?);
        text.push('\n');
    }
    if let Some(path) = out {
        let path = resolve_cache_path(path);
        let records: Result<Vec<CacheRecord>> =
            graphs.iter().map(CacheRecord::for_graph).collect();
        let records = records?;
        let file = std::fs::File::create(&path).map_err(|e| Error::Cache {
            line: 0,
            reason: format!("cannot create {}: {e}", path.display()),
        })?;
        crate::cache::write_records(std::io::BufWriter::new(file), &records).map_err(|e| {
            Error::Cache {
                line: 0,
                reason: e.to_string(),
            }
        })?;
    }
    Ok((text, 0))
}

/// Relative `--out` paths land in `QSPECTRA_CACHE_DIR` when it is set.
fn resolve_cache_path(path: PathBuf) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var(CACHE_DIR_ENV) {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path
}

fn format_mate_report(report: &MateReport) -> String {
    let mut text = String::new();
    let target = decode_graph6(&report.target_graph6).expect("own encoding");
    let poly = charpoly(&target, report.kind);
    text.push_str(&format!(
        "target\t{}\t{}\t{}\n",
        report.target_graph6,
        report.kind.letter(),
        poly.to_coeff_text()
    ));
    text.push_str(&format!(
        "scope\t{}\texamined={}\tsurvivors={}\n",
        report.scope, report.candidates_examined, report.prefilter_survivors
    ));
    for mate in &report.mates {
        let g = decode_graph6(mate).expect("own encoding");
        let p = charpoly(&g, report.kind);
        text.push_str(&format!(
            "mate\t{}\t{}\t{}\n",
            mate,
            report.kind.letter(),
            p.to_coeff_text()
        ));
    }
    text
}

fn cmd_hunt(graph6: &str, matrix: &str, jobs: Option<usize>) -> Result<(String, i32)> {
    let g = decode_graph6(graph6)?;
    let kind = parse_matrix(matrix)?;
    let config = HuntConfig {
        jobs,
        ..HuntConfig::default()
    };
    let report = lab::hunt_mates_with(&g, kind, &config)?;
    let mut text = format_mate_report(&report);
    let (verdict, code) = if report.determined() {
        ("determined-in-scope", 0)
    } else {
        ("not-determined", 1)
    };
    text.push_str(&format!("verdict\t{verdict}\n"));
    Ok((text, code))
}

fn cmd_verify(theorem: &str, params: &str, jobs: Option<usize>) -> Result<(String, i32)> {
    let id = TheoremId::parse(theorem)?;
    let (base_spec, r) = parse_theorem_params(params)?;
    let base = base_spec.build()?;
    let base_label = base_spec.to_string();
    let mut text = format!("theorem\t{}\ninstance\tbase={base_label}\tr={r}\n", id.token());
    match verify_theorem(id, &base, &base_label, r, jobs) {
        Ok(report) => {
            for h in &report.hypotheses {
                text.push_str(&format!(
                    "hypothesis\t{}\t{}\n",
                    h.name,
                    if h.ok { "ok" } else { "violated" }
                ));
            }
            for (label, verdict) in &report.conclusions {
                let detail = match verdict.report() {
                    Some(r) => format!(
                        "\torder={}\texamined={}\tsurvivors={}\tmates={}",
                        r.order,
                        r.candidates_examined,
                        r.prefilter_survivors,
                        if r.mates.is_empty() {
                            "-".to_string()
                        } else {
                            r.mates.join(",")
                        }
                    ),
                    None => String::new(),
                };
                text.push_str(&format!(
                    "conclusion\t{label}\t{}{detail}\n",
                    verdict.label()
                ));
            }
            let code = if report.passed { 0 } else { 1 };
            text.push_str(&format!(
                "result\t{}\n",
                if report.passed { "pass" } else { "fail" }
            ));
            Ok((text, code))
        }
        Err(Error::Hypothesis { theorem, check }) => {
            text.push_str(&format!("hypothesis-violation\t{theorem}\t{check}\n"));
            text.push_str("result\tfail\n");
            Ok((text, 1))
        }
        Err(other) => Err(other),
    }
}

fn cmd_registry(graph6: &str) -> Result<(String, i32)> {
    let g = decode_graph6(graph6)?;
    let matches = registry_lookup(&g);
    if matches.is_empty() {
        return Ok(("no-claims\n".to_string(), 1));
    }
    let mut text = String::new();
    for m in &matches {
        text.push_str(&format!(
            "claim\t{}\tinstance={}\tcondition={}\n",
            m.claim, m.instance, m.condition
        ));
    }
    Ok((text, 0))
}

/// Parse `G=...,r=...` (or `T=...`), with commas inside parentheses kept
/// together.
fn parse_theorem_params(params: &str) -> Result<(FamilySpec, usize)> {
    let mut base = None;
    let mut r = None;
    for piece in split_top_level(params) {
        let Some((key, value)) = piece.split_once('=') else {
            return Err(Error::FamilyParse {
                input: piece.to_string(),
                reason: "expected key=value".into(),
            });
        };
        match key.trim() {
            "G" | "T" => base = Some(value.trim().parse::<FamilySpec>()?),
            "r" => {
                r = Some(value.trim().parse::<usize>().map_err(|_| Error::FamilyParse {
                    input: value.to_string(),
                    reason: "r must be a nonnegative integer".into(),
                })?)
            }
            other => {
                return Err(Error::FamilyParse {
                    input: other.to_string(),
                    reason: "unknown parameter key (expected G, T or r)".into(),
                })
            }
        }
    }
    match (base, r) {
        (Some(b), Some(r)) => Ok((b, r)),
        _ => Err(Error::FamilyParse {
            input: params.to_string(),
            reason: "need both a base graph (G=... or T=...) and r=...".into(),
        }),
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl std::str::FromStr for FamilySpec {
    type Err = Error;

    /// The family grammar `kind(p1,p2,...)`, plus the shorthands `K<n>`,
    /// `P<n>`, `C<n>`, `F<n>` for complete graphs, paths, cycles and
    /// friendship graphs.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let s = s.trim();
        let bad = |reason: &str| Error::FamilyParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if let Some(rest) = s.strip_prefix(['K', 'P', 'C', 'F']) {
            if let Ok(n) = rest.parse::<usize>() {
                return FamilySpec::new(
                    match s.as_bytes()[0] {
                        b'K' => "complete",
                        b'P' => "path",
                        b'C' => "cycle",
                        _ => "friendship",
                    },
                    vec![n],
                );
            }
        }
        let open = s.find('(').ok_or_else(|| bad("expected kind(p1,p2,...)"))?;
        if !s.ends_with(')') {
            return Err(bad("missing closing parenthesis"));
        }
        let kind = &s[..open];
        let inner = &s[open + 1..s.len() - 1];
        let params: Result<Vec<usize>> = if inner.trim().is_empty() {
            Ok(Vec::new())
        } else {
            inner
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| bad(&format!("bad integer parameter {p:?}")))
                })
                .collect()
        };
        FamilySpec::new(kind, params?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (String, String, i32) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(
            std::iter::once("qspectra").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
            code,
        )
    }

    #[test]
    fn family_prints_counts() {
        let (out, _, code) = run(&["family", "lollipop(11,6)"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("n=11 m=11\n"), "{out}");
    }

    #[test]
    fn family_shorthand() {
        let (out, _, code) = run(&["family", "K4"]);
        assert_eq!(code, 0);
        assert!(out.contains("n=4 m=6"), "{out}");
    }

    #[test]
    fn spectrum_of_short_path() {
        let g6 = encode_graph6(&crate::families::path(3)).unwrap();
        let (out, _, code) = run(&["spectrum", &g6, "--matrix", "Q"]);
        assert_eq!(code, 0);
        assert!(out.contains("poly=0,3,-4,1"), "{out}");
        assert!(out.contains("roots=0,1,3"), "{out}");
    }

    #[test]
    fn bad_usage_exits_two() {
        let (_, err, code) = run(&["family", "lollipop(2,1)"]);
        assert_eq!(code, 2);
        assert!(err.contains("error"), "{err}");
        let (_, _, code) = run(&["no-such-command"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn decimal_rendering() {
        let r = BigRational::new(BigInt::from(-7), BigInt::from(2));
        assert_eq!(decimal_6(&r), "-3.500000");
        let r = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(decimal_6(&r), "0.333333");
    }

    #[test]
    fn theorem_params_parse_with_nested_commas() {
        let (base, r) = parse_theorem_params("G=lollipop(7,3),r=2").unwrap();
        assert_eq!(base, FamilySpec::Lollipop(7, 3));
        assert_eq!(r, 2);
    }
}
