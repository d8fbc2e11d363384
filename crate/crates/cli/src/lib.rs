//! Command implementations for the `qhopf` binary: deterministic reports
//! over the library's operations, in text or machine-readable form.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use quiver_hopf::bimodule::{verify_bimodule_axioms, verify_dual_pairing, ArrowBimodule};
use quiver_hopf::braided::{Biproduct, BiproductElement, BraidedAlgebra, Flavor, YdModule};
use quiver_hopf::config::JobConfig;
use quiver_hopf::copath;
use quiver_hopf::error::Error;
use quiver_hopf::group::Elem;
use quiver_hopf::quantum_group::{
    build_u, matches_rank_one_presentation, psi_phi_roundtrip, serre_primitive_check, validate_fl,
    SerreData,
};
use quiver_hopf::quiver::Path;
use quiver_hopf::scalar::{
    q_factorial, s_m_polynomial, QConvention, Scalar,
};
use quiver_hopf::semipath;
use quiver_hopf::structure::{classify_rsc_with_bound, rsc_isomorphic};
use quiver_hopf::taft::{nichols_check, presentation_check, Letter, TaftAlgebra};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "qhopf",
    about = "Exact computations in quiver Hopf algebras: classification, products, bases, Hopf-axiom verification, Nichols checks and quantum-group presentations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraKind {
    Copath,
    Semipath,
    Taft,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifySuite {
    Copath,
    Semipath,
    Bimodule,
    Biproduct,
    Confluence,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify all ramification systems with characters over (G, r)
    Classify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Multiply two element literals in a quiver Hopf algebra
    Multiply {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = AlgebraKind::Copath)]
        algebra: AlgebraKind,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the PBW basis of the multiple Taft algebra of an ESC
    Basis {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        cutoff: Option<u32>,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The dimension |G|·N₁⋯N_t of the multiple Taft algebra
    Dimension {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite (Hopf axioms, bimodule axioms, biproduct
    /// comparison, or rewriting confluence)
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum)]
        algebra: VerifySuite,
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check that the diagram of the multiple Taft algebra has primitives
    /// exactly in degree one
    Nichols {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        cutoff: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify primitivity of the q-Serre elements of Cartan data
    Serre {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the quantum-group presentation from Cartan data and verify
    /// the defining maps
    Uq {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// q-factorial identities: prints (m)_q! and S_m(q) and asserts
    /// (m)_q! = q^{m(m−1)/2}·S_m(q⁻¹)
    Qfact {
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// The machine-readable report; `schema_version` is bumped on any change
/// to this shape.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub checks: Vec<CheckJson>,
    pub outputs: BTreeMap<String, serde_json::Value>,
    pub pass: bool,
}

impl Report {
    fn new(command: &str) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            checks: Vec::new(),
            outputs: BTreeMap::new(),
            pass: true,
        }
    }

    fn check(&mut self, name: &str, pass: bool, witness: Option<String>) {
        self.pass &= pass;
        self.checks.push(CheckJson {
            name: name.into(),
            pass,
            witness,
        });
    }

    fn absorb(&mut self, lines: &[quiver_hopf::taft::CheckLine]) {
        for l in lines {
            self.check(&l.name, l.pass, l.witness.clone());
        }
    }

    fn output(&mut self, key: &str, value: serde_json::Value) {
        self.outputs.insert(key.into(), value);
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable report"),
            Format::Text => {
                let mut out = String::new();
                let _ = writeln!(out, "command: {}", self.command);
                for (k, v) in &self.outputs {
                    match v {
                        serde_json::Value::String(s) => {
                            let _ = writeln!(out, "{k}: {s}");
                        }
                        serde_json::Value::Array(items) => {
                            let _ = writeln!(out, "{k}:");
                            for item in items {
                                match item {
                                    serde_json::Value::String(s) => {
                                        let _ = writeln!(out, "  {s}");
                                    }
                                    other => {
                                        let _ = writeln!(out, "  {other}");
                                    }
                                }
                            }
                        }
                        other => {
                            let _ = writeln!(out, "{k}: {other}");
                        }
                    }
                }
                for c in &self.checks {
                    let _ = writeln!(
                        out,
                        "{}: {}{}",
                        c.name,
                        if c.pass { "pass" } else { "FAIL" },
                        c.witness
                            .as_ref()
                            .map(|w| format!(" ({w})"))
                            .unwrap_or_default()
                    );
                }
                let _ = writeln!(out, "result: {}", if self.pass { "pass" } else { "FAIL" });
                out
            }
        }
    }
}

/// Runs a command; returns the rendered report and the process exit code
/// (0 all checks pass, 1 verification failure, 2 configuration error).
pub fn run(cli: &Command) -> (String, i32) {
    match execute(cli) {
        Ok((report, format)) => {
            let code = if report.pass { 0 } else { 1 };
            (report.render(format), code)
        }
        Err(e) => {
            let code = match e {
                Error::Verification(_) => 1,
                _ => 2,
            };
            (format!("error: {e}\n"), code)
        }
    }
}

fn load(path: &PathBuf) -> Result<JobConfig, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    JobConfig::from_json(&text)
}

fn execute(cmd: &Command) -> Result<(Report, Format), Error> {
    match cmd {
        Command::Classify {
            config,
            bound,
            format,
        } => {
            let cfg = load(config)?;
            let group = cfg.build_group()?;
            let ram = cfg.build_ramification(&group)?;
            let bound = bound.or(cfg.bound).unwrap_or(65536);
            let reps = classify_rsc_with_bound(&group, &ram, bound)?;
            let mut report = Report::new("classify");
            report.output(
                "classes",
                serde_json::Value::Array(
                    reps.iter()
                        .map(|r| {
                            let desc: Vec<String> = r
                                .classes
                                .iter()
                                .map(|rc| {
                                    format!(
                                        "{}: {}",
                                        rc.class.rep.render(),
                                        rc.characters
                                            .iter()
                                            .map(render_character)
                                            .collect::<Vec<_>>()
                                            .join(", ")
                                    )
                                })
                                .collect();
                            serde_json::Value::String(desc.join(" | "))
                        })
                        .collect(),
                ),
            );
            report.output("count", serde_json::json!(reps.len()));
            // sanity: pairwise non-isomorphic
            let mut distinct = true;
            for (i, a) in reps.iter().enumerate() {
                for b in reps.iter().skip(i + 1) {
                    if rsc_isomorphic(a, b, 64)?.is_some() {
                        distinct = false;
                    }
                }
            }
            report.check("representatives pairwise non-isomorphic", distinct, None);
            Ok((report, *format))
        }
        Command::Multiply {
            config,
            algebra,
            left,
            right,
            cutoff,
            format,
        } => {
            let cfg = load(config)?;
            let cutoff = cutoff.or(cfg.cutoff).unwrap_or(copath::DEFAULT_DEGREE_CUTOFF);
            let mut report = Report::new("multiply");
            match algebra {
                AlgebraKind::Copath => {
                    let bm = bimodule_from_config(&cfg)?;
                    let l = parse_path(&bm, left)?;
                    let r = parse_path(&bm, right)?;
                    let prod = copath::multiply_paths(&bm, &l, &r, cutoff)?;
                    report.output("product", serde_json::json!(format!("{prod}")));
                }
                AlgebraKind::Semipath => {
                    let esc = cfg.build_esc()?;
                    let bm = ArrowBimodule::from_esc(&esc);
                    let l = parse_word(&bm, left)?;
                    let r = parse_word(&bm, right)?;
                    let (s, w) = semipath::multiply_words(&bm, &l, &r);
                    report.output(
                        "product",
                        serde_json::json!(format!("({s})·{}", w.render(&bm))),
                    );
                }
                AlgebraKind::Taft => {
                    let esc = cfg.build_esc()?;
                    let taft = TaftAlgebra::new(esc)?;
                    let l = parse_taft_word(&taft, left)?;
                    let r = parse_taft_word(&taft, right)?;
                    let prod = taft.multiply(&taft.normal_form(&l), &taft.normal_form(&r));
                    report.output("product", serde_json::json!(format!("{prod}")));
                }
            }
            Ok((report, *format))
        }
        Command::Basis {
            config,
            cutoff,
            bound,
            format,
        } => {
            let cfg = load(config)?;
            let esc = cfg.build_esc()?;
            let taft = TaftAlgebra::new(esc)?;
            let bound = bound.or(cfg.bound).unwrap_or(4096);
            let mut report = Report::new("basis");
            match taft.dimension() {
                quiver_hopf::taft::Dimension::Finite(d) if d <= bound => {
                    let basis = taft.enumerate_basis(bound)?;
                    report.output(
                        "basis",
                        serde_json::Value::Array(
                            basis
                                .iter()
                                .map(|m| serde_json::Value::String(format!("{m}")))
                                .collect(),
                        ),
                    );
                    report.output("size", serde_json::json!(basis.len()));
                }
                _ => {
                    let cutoff = cutoff.map(|c| c as u32).or(cfg.cutoff.map(|c| c as u32)).unwrap_or(3);
                    let basis = taft.diagram_basis(cutoff);
                    report.output(
                        "diagram_basis_up_to_degree",
                        serde_json::json!(cutoff),
                    );
                    report.output(
                        "basis",
                        serde_json::Value::Array(
                            basis
                                .iter()
                                .map(|m| serde_json::Value::String(format!("{m}")))
                                .collect(),
                        ),
                    );
                    report.output("size", serde_json::json!(basis.len()));
                }
            }
            Ok((report, *format))
        }
        Command::Dimension { config, format } => {
            let cfg = load(config)?;
            let esc = cfg.build_esc()?;
            let taft = TaftAlgebra::new(esc)?;
            let mut report = Report::new("dimension");
            match taft.dimension() {
                quiver_hopf::taft::Dimension::Finite(d) => {
                    report.output("dimension", serde_json::json!(d));
                    if d <= 4096 {
                        let count = taft.enumerate_basis(4096)?.len() as u64;
                        report.check(
                            "formula matches basis enumeration",
                            count == d,
                            Some(format!("enumerated {count}")).filter(|_| count != d),
                        );
                    }
                }
                quiver_hopf::taft::Dimension::Infinite => {
                    report.output("dimension", serde_json::json!("infinite"));
                }
            }
            Ok((report, *format))
        }
        Command::Verify {
            config,
            algebra,
            cutoff,
            seed,
            format,
        } => {
            let cfg = load(config)?;
            let cutoff = cutoff.or(cfg.cutoff).unwrap_or(3);
            let mut report = Report::new("verify");
            match algebra {
                VerifySuite::Copath => {
                    let bm = bimodule_from_config(&cfg)?;
                    let window = vertex_window(&bm);
                    let res = copath::verify_bialgebra(&bm, cutoff, window.as_deref());
                    push_outcome(&mut report, "co-path Hopf axioms", res);
                }
                VerifySuite::Semipath => {
                    let bm = bimodule_from_config(&cfg)?;
                    let window = vertex_window(&bm);
                    let res = semipath::verify_bialgebra(&bm, cutoff, window.as_deref());
                    push_outcome(&mut report, "semi-path Hopf axioms", res);
                }
                VerifySuite::Bimodule => {
                    let bm = bimodule_from_config(&cfg)?;
                    push_outcome(&mut report, "bimodule axioms", verify_bimodule_axioms(&bm));
                    push_outcome(&mut report, "dual coaction pairing", verify_dual_pairing(&bm));
                    // character recovery through the module functor
                    let mut ok = Ok(());
                    for (ci, rc) in bm.rsc.classes.iter().enumerate() {
                        for (i, (table, _)) in bm.w_functor(ci).iter().enumerate() {
                            for (h, s) in table {
                                if *s != rc.characters[i].eval(h) {
                                    ok = Err(Error::Verification(format!(
                                        "class {ci} index {i} at {h}"
                                    )));
                                }
                            }
                        }
                    }
                    push_outcome(&mut report, "module functor recovers characters", ok);
                }
                VerifySuite::Biproduct => {
                    let esc = cfg.build_esc()?;
                    let res = verify_biproduct_matches_taft(&esc);
                    push_outcome(&mut report, "biproduct matches the Taft product", res);
                }
                VerifySuite::Confluence => {
                    let esc = cfg.build_esc()?;
                    let taft = TaftAlgebra::new(esc)?;
                    let seed = seed.or(cfg.seed).unwrap_or(0);
                    let res = verify_confluence(&taft, seed, 200);
                    push_outcome(&mut report, "normal forms independent of rule order", res);
                }
            }
            Ok((report, *format))
        }
        Command::Nichols {
            config,
            cutoff,
            format,
        } => {
            let cfg = load(config)?;
            let esc = cfg.build_esc()?;
            let cutoff = cutoff.or(cfg.cutoff.map(|c| c as u32)).unwrap_or(3);
            let mut report = Report::new("nichols");
            let r = nichols_check(&esc, cutoff)?;
            report.absorb(&r.checks);
            let p = presentation_check(&esc, 4096)?;
            report.absorb(&p.checks);
            Ok((report, *format))
        }
        Command::Serre {
            config,
            cutoff,
            format,
        } => {
            let cfg = load(config)?;
            let fl = cfg.build_fl()?;
            let cutoff = cutoff.or(cfg.cutoff).unwrap_or(4);
            let mut report = Report::new("serre");
            for i in 0..fl.n {
                for j in 0..fl.n {
                    if i == j {
                        continue;
                    }
                    let data = SerreData {
                        group: fl.esc.group.clone(),
                        g: [fl.g(i).clone(), fl.g(j).clone()],
                        chi: [
                            fl.esc.items[i].chi.clone(),
                            fl.esc.items[j].chi.clone(),
                        ],
                    };
                    let r = fl.r[i][j];
                    let sub = serre_primitive_check(&data, r, cutoff)?;
                    for line in &sub.checks {
                        report.check(
                            &format!("pair ({},{}) r={}: {}", i + 1, j + 1, r, line.name),
                            line.pass,
                            line.witness.clone(),
                        );
                    }
                }
            }
            if fl.n == 1 {
                report.check("rank one: no Serre pairs", true, None);
            }
            Ok((report, *format))
        }
        Command::Uq { config, format } => {
            let cfg = load(config)?;
            let fl = cfg.build_fl()?;
            let mut report = Report::new("uq");
            let fl_report = validate_fl(&fl)?;
            report.absorb(&fl_report.conditions);
            let pres = build_u(&fl)?;
            report.output("generators", serde_json::json!(pres.generators));
            report.output("relations", serde_json::json!(pres.relations));
            report.output("coalgebra", serde_json::json!(pres.coalgebra));
            if fl.n == 1 {
                report.check(
                    "rank-one presentation shape",
                    matches_rank_one_presentation(&pres),
                    None,
                );
            }
            let phi = quiver_hopf::quantum_group::verify_phi_kills_ideal(&fl)?;
            report.absorb(&phi.checks);
            let round = psi_phi_roundtrip(&fl)?;
            report.absorb(&round.checks);
            Ok((report, *format))
        }
        Command::Qfact { m, format } => {
            let mut report = Report::new("qfact");
            let q = Scalar::q();
            let fact = q_factorial(*m, &q, QConvention::Gauss)?;
            let s_m = s_m_polynomial(*m, &q)?;
            report.output("q_factorial", serde_json::json!(format!("{fact}")));
            report.output("s_m", serde_json::json!(format!("{s_m}")));
            let s_m_inv = s_m_polynomial(*m, &q.inv().unwrap())?;
            let rhs = q
                .pow((*m as i64) * (*m as i64 - 1) / 2)
                .mul(&s_m_inv);
            report.check(
                "(m)_q! = q^(m(m-1)/2)·S_m(q⁻¹)",
                fact == rhs,
                Some(format!("lhs = {fact}, rhs = {rhs}")).filter(|_| fact != rhs),
            );
            Ok((report, *format))
        }
    }
}

fn push_outcome(report: &mut Report, name: &str, res: Result<(), Error>) {
    match res {
        Ok(()) => report.check(name, true, None),
        Err(e) => report.check(name, false, Some(e.to_string())),
    }
}

fn bimodule_from_config(cfg: &JobConfig) -> Result<ArrowBimodule, Error> {
    if cfg.rsc.is_some() {
        Ok(ArrowBimodule::new(cfg.build_rsc()?))
    } else if cfg.esc.is_some() {
        Ok(ArrowBimodule::from_esc(&cfg.build_esc()?))
    } else if cfg.cartan.is_some() {
        Ok(ArrowBimodule::from_esc(&cfg.build_fl()?.esc))
    } else {
        Err(Error::Config(
            "configuration needs an `rsc`, `esc` or `cartan` section".into(),
        ))
    }
}

fn vertex_window(bm: &ArrowBimodule) -> Option<Vec<Elem>> {
    if bm.rsc.group.is_free_abelian() {
        let rank = bm.rsc.group.rank().unwrap();
        let mut out = Vec::new();
        // a small cube of exponent vectors around the identity
        let mut stack: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..rank {
            let mut next = Vec::new();
            for prefix in &stack {
                for a in -1..=1i64 {
                    let mut v = prefix.clone();
                    v.push(a);
                    next.push(v);
                }
            }
            stack = next;
        }
        for v in stack {
            out.push(Elem::Vector(v));
        }
        Some(out)
    } else {
        None
    }
}

/// Parses a co-path literal: either a vertex element literal or
/// "a1[t<-s]·a1[t<-s]" with components listed target-to-source.
fn parse_path(bm: &ArrowBimodule, text: &str) -> Result<Path, Error> {
    let text = text.trim();
    if !text.contains('[') {
        return Ok(Path::vertex(bm.rsc.group.normalize(&Elem::parse(text)?)));
    }
    let mut arrows = Vec::new();
    for part in text.split('·').collect::<Vec<_>>().into_iter().rev() {
        let part = part.trim();
        let open = part
            .find('[')
            .ok_or_else(|| Error::Parse(format!("bad arrow literal `{part}`")))?;
        let idx: usize = part[1..open]
            .parse()
            .map_err(|_| Error::Parse(format!("bad arrow index in `{part}`")))?;
        let body = part[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("bad arrow literal `{part}`")))?;
        let (target, source) = body
            .split_once("<-")
            .ok_or_else(|| Error::Parse(format!("bad arrow literal `{part}`")))?;
        let source = bm.rsc.group.normalize(&Elem::parse(source)?);
        let target = bm.rsc.group.normalize(&Elem::parse(target)?);
        let candidates = bm.quiver.arrows_between(&source, &target);
        let arrow = candidates
            .into_iter()
            .find(|a| a.index == idx - 1)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "no arrow a{idx}[{}<-{}] in this quiver",
                    target.render(),
                    source.render()
                ))
            })?;
        arrows.push(arrow);
    }
    Ok(Path::from_arrows(arrows))
}

/// Parses a semi-path word literal "g^[1] * E1 * E3" (the leading element
/// may be omitted).
fn parse_word(
    bm: &ArrowBimodule,
    text: &str,
) -> Result<quiver_hopf::semipath::TensorWord, Error> {
    let mut leading = bm.rsc.group.identity();
    let mut arrows = Vec::new();
    for (i, part) in text.split('*').enumerate() {
        let part = part.trim();
        if let Some(e_idx) = part.strip_prefix('E') {
            let j: usize = e_idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator literal `{part}`")))?;
            if j == 0 || j > bm.esc_len() {
                return Err(Error::Parse(format!("generator E{j} out of range")));
            }
            arrows.push(bm.e_arrow(j - 1));
        } else if i == 0 {
            leading = bm.rsc.group.normalize(&Elem::parse(part)?);
        } else {
            return Err(Error::Parse(format!(
                "group element `{part}` must come first in a word literal"
            )));
        }
    }
    Ok(quiver_hopf::semipath::TensorWord { leading, arrows })
}

/// Parses a Taft word literal "g^[1] * E1^2 * E2" into rewriting letters.
fn parse_taft_word(taft: &TaftAlgebra, text: &str) -> Result<Vec<Letter>, Error> {
    let mut letters = Vec::new();
    for part in text.split('*') {
        let part = part.trim();
        if let Some(rest) = part.strip_prefix('E') {
            let (idx_text, exp) = match rest.split_once('^') {
                Some((i, e)) => (
                    i,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{part}`")))?,
                ),
                None => (rest, 1),
            };
            let j: usize = idx_text
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator literal `{part}`")))?;
            if j == 0 || j > taft.arity() {
                return Err(Error::Parse(format!("generator E{j} out of range")));
            }
            for _ in 0..exp {
                letters.push(Letter::Gen(j - 1));
            }
        } else {
            letters.push(Letter::Group(
                taft.esc.group.normalize(&Elem::parse(part)?),
            ));
        }
    }
    Ok(letters)
}

fn render_character(c: &quiver_hopf::group::Character) -> String {
    match c {
        quiver_hopf::group::Character::Exponents { exps, .. } => {
            format!("chi{exps:?}")
        }
        quiver_hopf::group::Character::GeneratorValues { values } => {
            let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            format!("chi({})", vals.join(", "))
        }
        quiver_hopf::group::Character::Table { values } => {
            let vals: Vec<String> = values
                .iter()
                .map(|(k, v)| format!("{}:{}", k.render(), v))
                .collect();
            format!("chi{{{}}}", vals.join(", "))
        }
    }
}

fn verify_biproduct_matches_taft(esc: &quiver_hopf::structure::Esc) -> Result<(), Error> {
    let taft = TaftAlgebra::new(esc.clone())?;
    let module = YdModule::from_esc(esc).inverted();
    let alg = BraidedAlgebra::new(module, Flavor::Linear)?;
    let bp = Biproduct::new(alg);
    let to_taft = |x: &BiproductElement| -> quiver_hopf::taft::TaftElement {
        let mut out = quiver_hopf::taft::TaftElement::zero();
        for ((word, g), c) in x.terms() {
            let mut exps = vec![0u32; esc.len()];
            for &l in word {
                exps[l] += 1;
            }
            let mut scalar = c.clone();
            for (j, &m) in exps.iter().enumerate() {
                for _ in 0..m {
                    scalar = scalar.mul(&esc.items[j].chi.eval(g));
                }
            }
            out.add_term(
                quiver_hopf::taft::PbwMonomial {
                    g: g.clone(),
                    exps,
                },
                scalar,
            );
        }
        out
    };
    let mut basis: Vec<BiproductElement> = Vec::new();
    for g in esc.group.elements() {
        basis.push(BiproductElement::from_term(vec![], g.clone(), Scalar::one()));
        for j in 0..esc.len() {
            basis.push(BiproductElement::from_term(vec![j], g.clone(), Scalar::one()));
        }
    }
    for a in &basis {
        for b in &basis {
            let lhs = to_taft(&bp.multiply(a, b));
            let rhs = taft.multiply(&to_taft(a), &to_taft(b));
            if lhs != rhs {
                return Err(Error::Verification(
                    "biproduct and Taft products disagree".into(),
                ));
            }
        }
    }
    Ok(())
}

fn verify_confluence(taft: &TaftAlgebra, seed: u64, count: usize) -> Result<(), Error> {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let elements = taft.esc.group.elements();
    for trial in 0..count {
        let len = rng.random_range(1..=6usize);
        let word: Vec<Letter> = (0..len)
            .map(|_| {
                if rng.random_bool(0.4) {
                    Letter::Group(elements[rng.random_range(0..elements.len())].clone())
                } else {
                    Letter::Gen(rng.random_range(0..taft.arity()))
                }
            })
            .collect();
        let reference = taft.normal_form(&word);
        for k in 0..3 {
            let shuffled = taft.normal_form_seeded(&word, seed ^ (trial as u64) ^ (k << 32));
            if shuffled != reference {
                return Err(Error::Verification(format!(
                    "normal forms diverge on trial {trial}"
                )));
            }
        }
    }
    Ok(())
}

