//! Serializable reports and their plain-text rendering.
//!
//! Counts are decimal strings so that JSON readers never lose precision.
//! Colors are integers, with `0` standing for the extra color `*` that
//! properization introduces.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use treedist::construction::render_color;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorEntry {
    pub label: String,
    pub color: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    /// The vertex whose child class violates the bound.
    pub vertex: String,
    /// Labels of the class members.
    pub class: Vec<String>,
    pub k: u64,
    /// `D_chi(T_u; k, 1)` for a member `u`.
    pub proper_count: String,
    /// `(k - 1) * proper_count`, which is below the class size.
    pub lhs: String,
    /// Set when `D = 1` on a tree with an edge: any proper coloring needs a
    /// second color.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub distinguishing: Vec<ColorEntry>,
    pub proper: Vec<ColorEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsReport {
    pub k: u64,
    /// `D(T'; k)`.
    pub distinguishing: String,
    /// `k * D_chi(T'; k, 1)`.
    pub proper: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    /// Input file name; absent for stdin.
    pub source: Option<String>,
    pub vertices: usize,
    /// One label, or the two ends of the central edge.
    pub center: Vec<String>,
    pub distinguishing_number: u64,
    pub distinguishing_chromatic_number: u64,
    pub certificate: Option<CertificateReport>,
    pub witness: Option<WitnessReport>,
    pub counts: Option<CountsReport>,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    /// Palette size; absent in list mode.
    pub k: Option<u64>,
    pub proper: bool,
    pub list: bool,
    pub count: String,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringReport {
    pub k: Option<u64>,
    pub proper: bool,
    pub index: Option<String>,
    pub colors: Vec<ColorEntry>,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub distinguishing_number: u64,
    pub distinguishing_chromatic_number: u64,
    pub certificate: Option<CertificateReport>,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub distinguishing: bool,
    /// Present when properness was checked.
    pub proper: Option<bool>,
    pub passed: bool,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub criteria: Vec<CriterionReport>,
    pub passed: bool,
    pub elapsed_us: u64,
}

fn colors_text(out: &mut String, colors: &[ColorEntry]) {
    for e in colors {
        let _ = writeln!(out, "{} {}", e.label, render_color(e.color));
    }
}

fn certificate_text(out: &mut String, cert: &Option<CertificateReport>) {
    match cert {
        None => out.push_str("certificate: none\n"),
        Some(c) if c.degenerate => {
            let _ = writeln!(out, "certificate: D = 1 on a tree with an edge");
        }
        Some(c) => {
            let _ = writeln!(
                out,
                "certificate: vertex {} with class {{{}}}, (k - 1) * D_chi = {} < {}",
                c.vertex,
                c.class.join(", "),
                c.lhs,
                c.class.len()
            );
        }
    }
}

impl AnalysisReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(s) = &self.source {
            let _ = writeln!(out, "== {s}");
        }
        let _ = writeln!(out, "vertices: {}", self.vertices);
        let _ = writeln!(out, "center: {}", self.center.join(" -- "));
        let _ = writeln!(out, "D: {}", self.distinguishing_number);
        let _ = writeln!(out, "chi_D: {}", self.distinguishing_chromatic_number);
        certificate_text(&mut out, &self.certificate);
        if let Some(c) = &self.counts {
            let _ = writeln!(out, "D(T'; {}): {}", c.k, c.distinguishing);
            let _ = writeln!(out, "k * D_chi(T'; {}, 1): {}", c.k, c.proper);
        }
        if let Some(w) = &self.witness {
            out.push_str("distinguishing coloring:\n");
            colors_text(&mut out, &w.distinguishing);
            out.push_str("proper distinguishing coloring:\n");
            colors_text(&mut out, &w.proper);
        }
        out
    }
}

impl CountReport {
    pub fn text(&self) -> String {
        format!("{}\n", self.count)
    }
}

impl ColoringReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        colors_text(&mut out, &self.colors);
        out
    }
}

impl CertifyReport {
    pub fn text(&self) -> String {
        let mut out = format!(
            "D: {}\nchi_D: {}\n",
            self.distinguishing_number, self.distinguishing_chromatic_number
        );
        certificate_text(&mut out, &self.certificate);
        out
    }
}

impl VerifyReport {
    pub fn text(&self) -> String {
        let mut out = format!("distinguishing: {}\n", yes_no(self.distinguishing));
        if let Some(p) = self.proper {
            let _ = writeln!(out, "proper: {}", yes_no(p));
        }
        let _ = writeln!(out, "{}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

impl SelftestReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            let _ = writeln!(
                out,
                "criterion {} [{}] {}: {}",
                c.id,
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
        let failed = self.criteria.iter().filter(|c| !c.passed).count();
        let _ = writeln!(
            out,
            "{} passed, {failed} failed",
            self.criteria.len() - failed
        );
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
