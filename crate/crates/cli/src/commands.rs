//! The subcommands, as functions from parsed input to reports.

use std::fs;
use std::io::Read;
use std::path::Path;
use std::time::Instant;

use anyhow::anyhow;
use num_bigint::BigUint;
use treedist::colored::{distinguishes, distinguishes_rooted, is_proper};
use treedist::construction::{
    distinguishing_chromatic_number_rooted, distinguishing_number_rooted, exact_counts,
};
use treedist::selftest::{run_all, Config};
use treedist::{
    chi_certificate, construct_distinguishing_coloring, construct_list_distinguishing_coloring,
    construct_proper_distinguishing_coloring, count_list_distinguishing,
    count_proper_distinguishing, count_proper_list_distinguishing, parameters, parse_tree,
    unrank_distinguishing, unrank_proper_distinguishing, Center, Coloring, ConstructError, Format,
    ListAssignment, ListError, Parsed, RootedTree, Tree, TreeError, STAR,
};

use crate::report::{
    AnalysisReport, CertificateReport, CertifyReport, ColorEntry, ColoringReport, CountReport,
    CountsReport, CriterionReport, SelftestReport, VerifyReport, WitnessReport,
};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    /// A verification or self-test failed.
    pub const FAILED: u8 = 1;
    /// Unreadable or malformed input.
    pub const INPUT: u8 = 2;
    /// A class cap or enumeration bound was exceeded.
    pub const LIMIT: u8 = 3;
    /// No coloring exists, or the index is out of range.
    pub const NONE: u8 = 4;
}

/// An error together with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn new(code: u8, error: impl Into<anyhow::Error>) -> Failure {
        Failure {
            code,
            error: error.into(),
        }
    }

    fn input(message: impl std::fmt::Display) -> Failure {
        Failure::new(exit::INPUT, anyhow!("{message}"))
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.error)
    }
}

impl From<TreeError> for Failure {
    fn from(e: TreeError) -> Failure {
        Failure::new(exit::INPUT, e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::new(exit::INPUT, e)
    }
}

impl From<ListError> for Failure {
    fn from(e: ListError) -> Failure {
        let code = match e {
            ListError::ClassCapExceeded { .. } => exit::LIMIT,
            _ => exit::INPUT,
        };
        Failure::new(code, e)
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Failure {
        let code = match e {
            ConstructError::TooFewColors { .. } | ConstructError::IndexOutOfRange { .. } => {
                exit::NONE
            }
            _ => exit::INPUT,
        };
        Failure::new(code, e)
    }
}

type Outcome<T> = Result<T, Failure>;

/// A parsed input tree and where it came from.
#[derive(Debug, Clone)]
pub struct Input {
    pub source: Option<String>,
    pub parsed: Parsed,
}

impl Input {
    pub fn tree(&self) -> &Tree {
        self.parsed.tree()
    }
}

/// Reads a file, or stdin for `None` and `-`.
pub fn read_text(path: Option<&Path>) -> Outcome<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).map_err(|e| {
            Failure::new(
                exit::INPUT,
                anyhow!(e).context(format!("reading {}", p.display())),
            )
        }),
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

pub fn read_input(path: Option<&Path>, format: Format) -> Outcome<Input> {
    let text = read_text(path)?;
    let parsed = parse_tree(&text, format)?;
    let source = path
        .filter(|p| *p != Path::new("-"))
        .map(|p| p.display().to_string());
    Ok(Input { source, parsed })
}

fn micros(start: Instant) -> u64 {
    start.elapsed().as_micros().try_into().unwrap_or(u64::MAX)
}

/// Color entries sorted by label.
fn entries(colors: &[u32], label: impl Fn(usize) -> String) -> Vec<ColorEntry> {
    let mut out: Vec<ColorEntry> = colors
        .iter()
        .enumerate()
        .map(|(v, &color)| ColorEntry {
            label: label(v),
            color,
        })
        .collect();
    out.sort_by(|a, b| a.label.cmp(&b.label));
    out
}

fn tree_entries(t: &Tree, c: &Coloring) -> Vec<ColorEntry> {
    entries(c.as_slice(), |v| t.label(v).to_string())
}

fn certificate_report(t: &Tree) -> Option<CertificateReport> {
    let cert = chi_certificate(t)?;
    let rt = treedist::to_rooted(t);
    Some(CertificateReport {
        vertex: rt.label(cert.x).to_string(),
        class: cert
            .members
            .iter()
            .map(|&u| rt.label(u).to_string())
            .collect(),
        k: cert.k,
        proper_count: cert.proper_count.to_string(),
        lhs: cert.lhs().to_string(),
        degenerate: cert.degenerate,
    })
}

fn center_labels(t: &Tree) -> Vec<String> {
    let mut labels: Vec<String> = match t.center() {
        Center::Vertex(x) => vec![t.label(x).to_string()],
        Center::Edge(u, v) => vec![t.label(u).to_string(), t.label(v).to_string()],
    };
    labels.sort();
    labels
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub witness: bool,
    pub counts: Option<u64>,
}

/// `D`, `chi_D` and the certificate of the underlying tree, plus optional
/// witnesses (on the tree) and exact counts (on the rooted tree: the
/// center reduction of an edge list, or the given parenthesis tree).
pub fn analyze(input: &Input, opts: AnalyzeOptions) -> Outcome<AnalysisReport> {
    let start = Instant::now();
    let t = input.tree();
    let params = parameters(t);
    let witness = if opts.witness {
        Some(WitnessReport {
            distinguishing: tree_entries(t, &construct_distinguishing_coloring(t, None)?),
            proper: tree_entries(t, &construct_proper_distinguishing_coloring(t, None)?),
        })
    } else {
        None
    };
    let counts = opts.counts.map(|k| {
        let (d, p) = exact_counts(&input.parsed.rooted(), k);
        CountsReport {
            k,
            distinguishing: d.value().to_string(),
            proper: p.value().to_string(),
        }
    });
    Ok(AnalysisReport {
        source: input.source.clone(),
        vertices: t.len(),
        center: center_labels(t),
        distinguishing_number: params.distinguishing,
        distinguishing_chromatic_number: params.chromatic,
        certificate: certificate_report(t),
        witness,
        counts,
        elapsed_us: micros(start),
    })
}

/// Lists for the rooted tree of `input`, from the list file text. The
/// subdivision vertex of an edge-centered tree needs a line of its own.
fn rooted_lists(input: &Input, rt: &RootedTree, text: &str) -> Outcome<ListAssignment> {
    let (lists, center) = ListAssignment::parse(text, input.tree())?;
    match (rt.subdivision_vertex(), center) {
        (Some(_), Some(extra)) => Ok(lists.for_rooted(rt, extra)?),
        (Some(s), None) => Err(Failure::input(format!(
            "the tree is edge-centered: the list file needs a line for `{}`",
            rt.label(s)
        ))),
        (None, Some(_)) => Err(Failure::input(format!(
            "the tree has no vertex `{}`",
            treedist::CENTER_LABEL
        ))),
        (None, None) => Ok(lists.for_rooted(rt, Default::default())?),
    }
}

#[derive(Debug, Clone)]
pub struct CountOptions {
    pub k: Option<u64>,
    pub proper: bool,
    pub lists: Option<String>,
    pub class_cap: usize,
}

/// Exact class counts on the rooted tree: `D(T'; k)`, `k * D_chi(T'; k, 1)`,
/// or their list versions.
pub fn count(input: &Input, opts: &CountOptions) -> Outcome<CountReport> {
    let start = Instant::now();
    let rt = input.parsed.rooted();
    let value: BigUint = match &opts.lists {
        None => {
            let k = opts
                .k
                .ok_or_else(|| Failure::input("-k is required without --list"))?;
            let (d, p) = exact_counts(&rt, k);
            if opts.proper {
                p.into_value()
            } else {
                d.into_value()
            }
        }
        Some(text) => {
            let lists = rooted_lists(input, &rt, text)?;
            if let Some(k) = opts.k {
                if lists.uniform_size() != Some(k as usize) {
                    return Err(Failure::input(format!(
                        "-k {k} given but the lists are not all of size {k}"
                    )));
                }
            }
            if opts.proper {
                let mut total = BigUint::from(0u32);
                for &i in lists.list(rt.root()) {
                    total += count_proper_list_distinguishing(&rt, &lists, i, opts.class_cap)?
                        .into_value();
                }
                total
            } else {
                count_list_distinguishing(&rt, &lists, opts.class_cap)?.into_value()
            }
        }
    };
    Ok(CountReport {
        k: if opts.lists.is_some() { None } else { opts.k },
        proper: opts.proper,
        list: opts.lists.is_some(),
        count: value.to_string(),
        elapsed_us: micros(start),
    })
}

#[derive(Debug, Clone)]
pub struct ColorOptions {
    pub k: Option<u64>,
    pub proper: bool,
    pub lists: Option<String>,
    pub index: Option<BigUint>,
    pub class_cap: usize,
}

/// The class of `index` among the (proper) distinguishing `k`-colorings of
/// the rooted tree. Proper indices run over root colors first.
fn unrank_rooted(
    rt: &RootedTree,
    k: Option<u64>,
    proper: bool,
    index: &BigUint,
) -> Outcome<(u64, Coloring)> {
    if !proper {
        let k = k.unwrap_or_else(|| distinguishing_number_rooted(rt));
        return Ok((k, unrank_distinguishing(rt, k, index)?));
    }
    let k = k.unwrap_or_else(|| distinguishing_chromatic_number_rooted(rt));
    let per_root = count_proper_distinguishing(rt, k, None).into_value();
    let total = &per_root * BigUint::from(k);
    if index >= &total {
        return Err(ConstructError::IndexOutOfRange {
            index: index.to_string(),
            count: total.to_string(),
        }
        .into());
    }
    let root_color = u32::try_from(index / &per_root).expect("below k") + 1;
    Ok((
        k,
        unrank_proper_distinguishing(rt, k, root_color, &(index % &per_root))?,
    ))
}

/// A witness coloring. Without an index it colors the tree itself with the
/// fewest colors (or `k`); with `--index` it lists colorings of the rooted
/// tree, the subdivision vertex included.
pub fn color(input: &Input, opts: &ColorOptions) -> Outcome<ColoringReport> {
    let start = Instant::now();
    let t = input.tree();
    let colors = match (&opts.lists, &opts.index, &input.parsed) {
        (Some(_), Some(_), _) => {
            return Err(Failure::input("--index cannot be combined with --list"))
        }
        (Some(text), None, _) => {
            let (lists, _) = ListAssignment::parse(text, t)?;
            let found =
                construct_list_distinguishing_coloring(t, &lists, opts.proper, opts.class_cap)?;
            let c = found.ok_or_else(|| {
                Failure::new(
                    exit::NONE,
                    anyhow!("no distinguishing coloring from these lists"),
                )
            })?;
            tree_entries(t, &c)
        }
        (None, None, Parsed::Unrooted(t)) => {
            let c = if opts.proper {
                construct_proper_distinguishing_coloring(t, opts.k)?
            } else {
                construct_distinguishing_coloring(t, opts.k)?
            };
            tree_entries(t, &c)
        }
        (None, index, parsed) => {
            let rt = parsed.rooted();
            let index = index.clone().unwrap_or_default();
            let (_, c) = unrank_rooted(&rt, opts.k, opts.proper, &index)?;
            entries(c.as_slice(), |v| rt.label(v).to_string())
        }
    };
    Ok(ColoringReport {
        k: opts.k,
        proper: opts.proper,
        index: opts.index.as_ref().map(BigUint::to_string),
        colors,
        elapsed_us: micros(start),
    })
}

pub fn certify(input: &Input) -> Outcome<CertifyReport> {
    let start = Instant::now();
    let t = input.tree();
    let params = parameters(t);
    Ok(CertifyReport {
        distinguishing_number: params.distinguishing,
        distinguishing_chromatic_number: params.chromatic,
        certificate: certificate_report(t),
        elapsed_us: micros(start),
    })
}

/// Parses `label color` lines, `*` meaning the extra color.
pub fn parse_coloring(text: &str, t: &Tree) -> Outcome<Vec<u32>> {
    let mut colors: Vec<Option<u32>> = vec![None; t.len()];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |m: &str| Failure::input(format!("coloring line {}: {m}", i + 1));
        let (label, color) = line
            .rsplit_once(char::is_whitespace)
            .ok_or_else(|| bad("expected `label color`"))?;
        let color = match color {
            "*" => STAR,
            c => c
                .parse::<u32>()
                .ok()
                .filter(|&c| c > 0)
                .ok_or_else(|| bad("colors are positive integers or `*`"))?,
        };
        let v = t
            .vertex(label.trim())
            .ok_or_else(|| bad("unknown vertex"))?;
        if colors[v].replace(color).is_some() {
            return Err(bad("vertex colored twice"));
        }
    }
    colors
        .into_iter()
        .enumerate()
        .map(|(v, c)| {
            c.ok_or_else(|| Failure::input(format!("vertex `{}` has no color", t.label(v))))
        })
        .collect()
}

/// Checks a coloring: distinguishing for the tree (root fixed for
/// parenthesis input), and proper if asked.
pub fn verify(input: &Input, coloring: &str, proper: bool) -> Outcome<VerifyReport> {
    let start = Instant::now();
    let t = input.tree();
    let colors = parse_coloring(coloring, t)?;
    let dist = match &input.parsed {
        Parsed::Unrooted(t) => distinguishes(t, &colors),
        Parsed::Rooted(rt) => distinguishes_rooted(rt, &colors),
    };
    let proper = proper.then(|| is_proper(t, &colors));
    Ok(VerifyReport {
        distinguishing: dist,
        proper,
        passed: dist && proper != Some(false),
        elapsed_us: micros(start),
    })
}

pub fn selftest(max_n: Option<usize>) -> SelftestReport {
    let start = Instant::now();
    let cfg = match max_n {
        Some(n) => Config::default().with_max_n(n),
        None => Config::default(),
    };
    let criteria: Vec<CriterionReport> = run_all(&cfg)
        .into_iter()
        .map(|o| CriterionReport {
            id: o.id,
            name: o.name.to_string(),
            passed: o.passed,
            detail: o.detail,
            elapsed_us: o.elapsed.as_micros().try_into().unwrap_or(u64::MAX),
        })
        .collect();
    SelftestReport {
        passed: criteria.iter().all(|c| c.passed),
        criteria,
        elapsed_us: micros(start),
    }
}
