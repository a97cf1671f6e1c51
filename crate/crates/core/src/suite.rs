//! End-to-end verification suites and their reports.
//!
//! Every suite is deterministic in its root seed: trial i draws from
//! `SplitMix64::derive(seed, i)`, failures are recorded in trial order, and
//! reports serialize with a stable key order.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::field::FieldSpec;
use crate::graph::{enumerate_graphs, u_a, u_s, LoopGraph};
use crate::matrix::Matrix;
use crate::rng::SplitMix64;
use crate::space::{
    extremal, extremal_max_rank_member, random_space, symmetric_cells, AffineSpace, ExtremalKind,
    RandomKind, SpaceKind, SPAN_CHECK_CAP,
};
use crate::theorem::{
    coeff_check_pf, coeff_check_prop1, witness_search_alt, witness_search_ws, MatchingSelection,
    TheoremError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuiteError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FailureDetail {
    pub space_text: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of one suite run. `fail == 0` iff the suite verdict is PASS.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, u64>,
    pub pass: u64,
    pub fail: u64,
    pub skip: u64,
    pub failures: Vec<FailureDetail>,
}

impl VerificationReport {
    fn new(suite: &str, params: &[(&str, u64)]) -> VerificationReport {
        VerificationReport {
            suite: suite.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            pass: 0,
            fail: 0,
            skip: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.fail == 0
    }

    fn record(&mut self, ok: bool, space_text: &str, expected: &str, got: &str) {
        if ok {
            self.pass += 1;
        } else {
            self.fail += 1;
            self.failures.push(FailureDetail {
                space_text: space_text.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "suite {}: {} (pass={} fail={} skip={})\n",
            self.suite, verdict, self.pass, self.fail, self.skip
        ));
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if !params.is_empty() {
            out.push_str(&format!("  params: {}\n", params.join(" ")));
        }
        for f in &self.failures {
            out.push_str(&format!("  FAILURE expected {}; got {}\n", f.expected, f.got));
            for line in f.space_text.lines() {
                out.push_str(&format!("    {line}\n"));
            }
        }
        out
    }
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn field(p: u32) -> Result<FieldSpec, SuiteError> {
    FieldSpec::new(p).map_err(|e| SuiteError::InvalidParams(e.to_string()))
}

fn ambient_dim(kind: RandomKind, n: usize) -> usize {
    match kind {
        RandomKind::Symmetric | RandomKind::DisjointSupportWs => n * (n + 1) / 2,
        RandomKind::Alternating => n * (n - 1) / 2,
    }
}

/// One random space with shape parameters drawn from the trial stream.
fn draw_space(
    kinds: &[RandomKind],
    spec: FieldSpec,
    n_max: usize,
    d_max: usize,
    rng: &mut SplitMix64,
) -> AffineSpace {
    let n = 1 + rng.below(n_max as u64) as usize;
    let kind = kinds[rng.below(kinds.len() as u64) as usize];
    let d_cap = d_max.min(ambient_dim(kind, n));
    let d = rng.below(d_cap as u64 + 1) as usize;
    random_space(kind, spec, n, d, rng).expect("drawn dimensions fit the ambient space")
}

/// Rank lower bounds on translates of weakly symmetric spans over |F| >= 3:
/// the grid witness reaches rank >= mu(G_S), the oracle confirms
/// rho(S) >= mu(G_S), and the top-monomial determinant coefficient is nonzero
/// on small restrictions.
pub fn verify_thm1(
    n_max: usize,
    p: u32,
    d_max: usize,
    trials: u64,
    seed: u64,
    cap: u64,
) -> Result<VerificationReport, SuiteError> {
    if p < 3 {
        return Err(SuiteError::InvalidParams(format!(
            "the weakly symmetric bound needs |F| >= 3; p = {p} (see the GF(2) counterexamples)"
        )));
    }
    let spec = field(p)?;
    let mut report = VerificationReport::new(
        "thm1",
        &[
            ("n", n_max as u64),
            ("p", p as u64),
            ("d", d_max as u64),
            ("trials", trials),
            ("seed", seed),
            ("cap", cap),
        ],
    );
    let kinds =
        [RandomKind::Symmetric, RandomKind::Alternating, RandomKind::DisjointSupportWs];
    for trial in 0..trials {
        let mut rng = SplitMix64::derive(seed, trial);
        let space = draw_space(&kinds, spec, n_max, d_max, &mut rng);
        run_ws_trial(&space, cap, &mut report);
    }
    Ok(report)
}

fn run_ws_trial(space: &AffineSpace, cap: u64, report: &mut VerificationReport) {
    let text = space.serialize();
    let graph = match space.leading_graph() {
        Ok(g) => g,
        Err(e) => {
            report.record(false, &text, "a leading graph", &e.to_string());
            return;
        }
    };
    let mu = graph.mu();
    let witness = match witness_search_ws(space, SPAN_CHECK_CAP) {
        Ok(w) => w,
        Err(TheoremError::HypothesisViolation { .. }) => {
            report.skip += 1;
            return;
        }
        Err(e) => {
            report.record(false, &text, "a grid witness", &e.to_string());
            return;
        }
    };
    if witness.achieved_rank < mu {
        report.record(
            false,
            &text,
            &format!("witness rank >= mu = {mu}"),
            &format!("rank {}", witness.achieved_rank),
        );
        return;
    }
    if space.member_count() <= cap as u128 {
        let (rho, _) = space.max_rank_oracle(cap).expect("member count under cap");
        if rho < mu || witness.achieved_rank > rho {
            report.record(
                false,
                &text,
                &format!("mu = {mu} <= rho and witness <= rho"),
                &format!("rho = {rho}, witness rank {}", witness.achieved_rank),
            );
            return;
        }
    }
    // Top-monomial determinant coefficient on small restrictions.
    if mu >= 1 && mu <= 5 {
        let canonical = space.canonicalize().expect("generated spaces canonicalize").space;
        let matching = graph.max_matching_witness();
        let sel = MatchingSelection::for_canonical(&canonical, &matching)
            .expect("matching edges come from the canonical leading cells");
        match coeff_check_prop1(&canonical, &sel) {
            Ok(c) if !c.is_zero() => {}
            Ok(c) => {
                report.record(false, &text, "nonzero top-monomial coefficient", &format!("{}", c.value()));
                return;
            }
            Err(e) => {
                report.record(false, &text, "a coefficient extraction", &e.to_string());
                return;
            }
        }
    }
    report.record(true, "", "", "");
}

/// Rank lower bounds on affine spaces of alternating matrices over any
/// field, with the {0,1}-grid Pfaffian witness and the x_1...x_t coefficient
/// identity.
pub fn verify_thm2(
    n_max: usize,
    p: u32,
    d_max: usize,
    trials: u64,
    seed: u64,
    cap: u64,
) -> Result<VerificationReport, SuiteError> {
    let spec = field(p)?;
    let mut report = VerificationReport::new(
        "thm2",
        &[
            ("n", n_max as u64),
            ("p", p as u64),
            ("d", d_max as u64),
            ("trials", trials),
            ("seed", seed),
            ("cap", cap),
        ],
    );
    for trial in 0..trials {
        let mut rng = SplitMix64::derive(seed, trial);
        let space = draw_space(&[RandomKind::Alternating], spec, n_max, d_max, &mut rng);
        run_alt_trial(&space, cap, &mut report);
    }
    Ok(report)
}

fn run_alt_trial(space: &AffineSpace, cap: u64, report: &mut VerificationReport) {
    let text = space.serialize();
    let graph = match space.leading_graph() {
        Ok(g) => g,
        Err(e) => {
            report.record(false, &text, "a leading graph", &e.to_string());
            return;
        }
    };
    let mu = graph.mu();
    let nu = graph.nu();
    if mu != 2 * nu {
        report.record(false, &text, "mu = 2 nu on a loopless graph", &format!("mu={mu} nu={nu}"));
        return;
    }
    let witness = match witness_search_alt(space) {
        Ok(w) => w,
        Err(TheoremError::HypothesisViolation { .. }) => {
            report.skip += 1;
            return;
        }
        Err(e) => {
            report.record(false, &text, "a grid witness", &e.to_string());
            return;
        }
    };
    if witness.achieved_rank < mu {
        report.record(
            false,
            &text,
            &format!("witness rank >= mu = {mu}"),
            &format!("rank {}", witness.achieved_rank),
        );
        return;
    }
    if witness.search_size > 1u64 << witness.point.len() {
        report.record(
            false,
            &text,
            "witness inside the {0,1}^t grid",
            &format!("{} evaluations", witness.search_size),
        );
        return;
    }
    if space.member_count() <= cap as u128 {
        let (rho, _) = space.max_rank_oracle(cap).expect("member count under cap");
        if rho < mu || witness.achieved_rank > rho {
            report.record(
                false,
                &text,
                &format!("mu = {mu} <= rho and witness <= rho"),
                &format!("rho = {rho}, witness rank {}", witness.achieved_rank),
            );
            return;
        }
    }
    // Pfaffian coefficient identity on small restrictions.
    if nu >= 1 && nu <= 4 {
        let canonical = space.canonicalize().expect("generated spaces canonicalize").space;
        let matching = graph.max_matching_witness();
        let sel = MatchingSelection::for_canonical(&canonical, &matching)
            .expect("matching edges come from the canonical leading cells");
        match coeff_check_pf(&canonical, &sel) {
            Ok(pc) if !pc.coefficient.is_zero() && pc.coefficient == pc.closed_form => {}
            Ok(pc) => {
                report.record(
                    false,
                    &text,
                    "nonzero x_1...x_t coefficient equal to its closed form",
                    &format!("coefficient {} vs closed form {}", pc.coefficient.value(), pc.closed_form.value()),
                );
                return;
            }
            Err(e) => {
                report.record(false, &text, "a coefficient extraction", &e.to_string());
                return;
            }
        }
    }
    report.record(true, "", "", "");
}

/// The quantities appearing in the doubling chain for a symmetric GF(2)
/// space S and its alternating double S'.
#[derive(Clone, Debug)]
pub struct Cor3Links {
    pub rho: usize,
    pub rho_doubled: usize,
    pub mu: usize,
    pub nu: usize,
    pub mu_doubled: usize,
    pub nu_doubled: usize,
    pub witness_rank_doubled: usize,
}

pub fn cor3_links(space: &AffineSpace, cap: u64) -> Result<Cor3Links, TheoremError> {
    let doubled = space.double_symmetric()?;
    let graph = space.leading_graph()?;
    let graph_doubled = doubled.leading_graph()?;
    let (rho, _) = space.max_rank_oracle(cap)?;
    let (rho_doubled, _) = doubled.max_rank_oracle(cap)?;
    let witness = witness_search_alt(&doubled)?;
    Ok(Cor3Links {
        rho,
        rho_doubled,
        mu: graph.mu(),
        nu: graph.nu(),
        mu_doubled: graph_doubled.mu(),
        nu_doubled: graph_doubled.nu(),
        witness_rank_doubled: witness.achieved_rank,
    })
}

/// The GF(2) symmetric bound rho(S) >= nu(G_S) via the doubling chain
/// 2 rho(S) = rho(S') >= mu(G_{S'}) = 2 nu(G_{S'}) >= 2 nu(G_S).
///
/// The final link is verified as an inequality: nu(G_{S'}) can exceed
/// nu(G_S) (leading cells (1,2) and (2,3) double to the disjoint edges
/// {1,5}, {2,6}), and the inequality is what the bound needs.
pub fn verify_cor3(
    n_max: usize,
    d_max: usize,
    trials: u64,
    seed: u64,
    cap: u64,
) -> Result<VerificationReport, SuiteError> {
    let spec = field(2)?;
    let mut report = VerificationReport::new(
        "cor3",
        &[
            ("n", n_max as u64),
            ("d", d_max as u64),
            ("trials", trials),
            ("seed", seed),
            ("cap", cap),
        ],
    );
    for trial in 0..trials {
        let mut rng = SplitMix64::derive(seed, trial);
        let space = draw_space(&[RandomKind::Symmetric], spec, n_max, d_max, &mut rng);
        let text = space.serialize();
        let links = match cor3_links(&space, cap) {
            Ok(l) => l,
            Err(e) => {
                report.record(false, &text, "the doubling chain quantities", &e.to_string());
                continue;
            }
        };
        let checks: [(&str, bool); 6] = [
            ("2 rho(S) = rho(S')", 2 * links.rho == links.rho_doubled),
            ("rho(S') >= mu(G_S')", links.rho_doubled >= links.mu_doubled),
            ("witness rank >= mu(G_S')", links.witness_rank_doubled >= links.mu_doubled),
            ("mu(G_S') = 2 nu(G_S')", links.mu_doubled == 2 * links.nu_doubled),
            ("nu(G_S') >= nu(G_S)", links.nu_doubled >= links.nu),
            ("rho(S) >= nu(G_S)", links.rho >= links.nu),
        ];
        match checks.iter().find(|(_, ok)| !ok) {
            None => report.record(true, "", "", ""),
            Some((what, _)) => {
                report.record(
                    false,
                    &text,
                    what,
                    &format!(
                        "rho={} rho'={} mu={} nu={} mu'={} nu'={} witness'={}",
                        links.rho,
                        links.rho_doubled,
                        links.mu,
                        links.nu,
                        links.mu_doubled,
                        links.nu_doubled,
                        links.witness_rank_doubled
                    ),
                );
            }
        }
    }
    Ok(report)
}

/// The two GF(2) spaces with mu(G_S) > rho(S).
pub fn counterexample_spaces() -> (AffineSpace, AffineSpace) {
    let spec = FieldSpec::new(2).expect("2 is prime");
    let first = AffineSpace::new(
        SpaceKind::Symmetric,
        Matrix::from_rows(spec, &[vec![0, 0], vec![0, 1]]).expect("2x2"),
        vec![Matrix::from_rows(spec, &[vec![1, 1], vec![1, 0]]).expect("2x2")],
    )
    .expect("valid symmetric space");
    let second = AffineSpace::new(
        SpaceKind::Symmetric,
        Matrix::zero(spec, 3, 3),
        vec![
            Matrix::from_rows(spec, &[vec![1, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]).expect("3x3"),
            Matrix::from_rows(spec, &[vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1]]).expect("3x3"),
        ],
    )
    .expect("valid symmetric space");
    (first, second)
}

/// The GF(2) counterexamples: (mu, rho) = (2, 1) and (3, 2), and
/// nu(G_S) = rho(S) in both.
pub fn verify_counterexamples_f2() -> VerificationReport {
    let mut report = VerificationReport::new("counterexamples", &[]);
    let (first, second) = counterexample_spaces();
    for (space, exp_mu, exp_rho) in [(first, 2usize, 1usize), (second, 3, 2)] {
        let text = space.serialize();
        let graph = match space.leading_graph() {
            Ok(g) => g,
            Err(e) => {
                report.record(false, &text, "a leading graph", &e.to_string());
                continue;
            }
        };
        let (rho, _) = space.max_rank_oracle(1024).expect("tiny spaces");
        let ok = graph.mu() == exp_mu && rho == exp_rho && graph.nu() == rho;
        report.record(
            ok,
            &text,
            &format!("mu={exp_mu} rho={exp_rho} nu=rho"),
            &format!("mu={} rho={} nu={}", graph.mu(), rho, graph.nu()),
        );
    }
    report
}

/// Shared tightness checker for one extremal family instance.
fn check_extremal(
    kind: ExtremalKind,
    spec: FieldSpec,
    n: usize,
    k: usize,
    expected_dim: u64,
    cap: u64,
    report: &mut VerificationReport,
) {
    let space = match extremal(kind, spec, n, k) {
        Ok(s) => s,
        Err(e) => {
            report.record(false, "", &format!("{} space for n={n} k={k}", kind.name()), &e.to_string());
            return;
        }
    };
    let text = space.serialize();
    if space.dim() as u64 != expected_dim {
        report.record(
            false,
            &text,
            &format!("dim {} for {}(n={n}, k={k})", expected_dim, kind.name()),
            &format!("dim {}", space.dim()),
        );
        return;
    }
    // Canonical dimension agrees (the cell basis is independent).
    let canon = space.canonicalize().expect("cell bases canonicalize");
    if canon.dropped != 0 || canon.space.dim() != space.dim() {
        report.record(false, &text, "an independent cell basis", &format!("dropped {}", canon.dropped));
        return;
    }
    let member = extremal_max_rank_member(kind, spec, n, k).expect("parameters already validated");
    if member.rank() != k {
        report.record(false, &text, &format!("explicit member of rank {k}"), &format!("rank {}", member.rank()));
        return;
    }
    // The member must lie in the family's support.
    for cell in symmetric_cells(n) {
        if !kind.supports(n, k, cell) && !member.get(cell.i() - 1, cell.j() - 1).is_zero() {
            report.record(false, &text, "member supported inside the family", &format!("nonzero at {cell}"));
            return;
        }
    }
    // rho = k: the explicit member gives >=; the support structure bounds
    // every member by k, and the oracle confirms it when feasible.
    if space.member_count() <= cap.min(1 << 20) as u128 {
        let (rho, _) = space.max_rank_oracle(cap).expect("under cap");
        if rho != k {
            report.record(false, &text, &format!("rho = {k}"), &format!("rho = {rho}"));
            return;
        }
    }
    report.record(true, "", "", "");
}

/// Dimension bound for affine alternating spaces of bounded rank:
/// extremal tightness plus random spaces never exceeding u_a(n, rho).
pub fn verify_thm4(
    n_max: usize,
    k_max: usize,
    p: u32,
    trials: u64,
    seed: u64,
    cap: u64,
) -> Result<VerificationReport, SuiteError> {
    let spec = field(p)?;
    let mut report = VerificationReport::new(
        "thm4",
        &[
            ("n", n_max as u64),
            ("k", k_max as u64),
            ("p", p as u64),
            ("trials", trials),
            ("seed", seed),
            ("cap", cap),
        ],
    );
    for n in 2..=n_max {
        for k in (0..n.min(k_max + 1)).step_by(2) {
            let t = (k / 2) as u64;
            check_extremal(ExtremalKind::U1Alternating, spec, n, k, choose2(k as u64 + 1), cap, &mut report);
            check_extremal(
                ExtremalKind::U2Alternating,
                spec,
                n,
                k,
                t * n as u64 - choose2(t + 1),
                cap,
                &mut report,
            );
            // The bound function is the max of the two dimensions.
            let ua = u_a(n as u64, k as u64).expect("valid parameters");
            let expected = choose2(k as u64 + 1).max(t * n as u64 - choose2(t + 1));
            report.record(
                ua == expected,
                "",
                &format!("u_a({n},{k}) = max of the family dimensions = {expected}"),
                &format!("{ua}"),
            );
        }
    }
    for trial in 0..trials {
        let mut rng = SplitMix64::derive(seed, trial);
        let space = draw_space(&[RandomKind::Alternating], spec, n_max, 6, &mut rng);
        let text = space.serialize();
        let n = space.n() as u64;
        let graph = space.leading_graph().expect("alternating spaces have leading graphs");
        let (rho, _) = match space.max_rank_oracle(cap) {
            Ok(r) => r,
            Err(e) => {
                report.record(false, &text, "an oracle rank", &e.to_string());
                continue;
            }
        };
        if rho % 2 != 0 {
            report.record(false, &text, "even rho on an alternating space", &format!("rho = {rho}"));
            continue;
        }
        if graph.mu() > rho {
            report.record(false, &text, "mu(G_S) <= rho(S)", &format!("mu={} rho={rho}", graph.mu()));
            continue;
        }
        let dim = space.canonicalize().expect("generated spaces canonicalize").space.dim() as u64;
        if (rho as u64) < n {
            let bound = u_a(n, rho as u64).expect("rho <= n");
            if dim > bound {
                report.record(
                    false,
                    &text,
                    &format!("dim <= u_a({n},{rho}) = {bound}"),
                    &format!("dim = {dim}"),
                );
                continue;
            }
        }
        report.record(true, "", "", "");
    }
    Ok(report)
}

/// Dimension bound for translates of weakly symmetric spans of bounded rank
/// over |F| >= 3: extremal tightness plus random spaces never exceeding
/// u_s(n, rho).
pub fn verify_thm5(
    n_max: usize,
    k_max: usize,
    p: u32,
    trials: u64,
    seed: u64,
    cap: u64,
) -> Result<VerificationReport, SuiteError> {
    if p < 3 {
        return Err(SuiteError::InvalidParams(format!(
            "the weakly symmetric dimension bound needs |F| >= 3; p = {p}"
        )));
    }
    let spec = field(p)?;
    let mut report = VerificationReport::new(
        "thm5",
        &[
            ("n", n_max as u64),
            ("k", k_max as u64),
            ("p", p as u64),
            ("trials", trials),
            ("seed", seed),
            ("cap", cap),
        ],
    );
    for n in 1..=n_max {
        for k in 0..=n.min(k_max) {
            let t = (k / 2) as u64;
            let u2_dim = if k % 2 == 0 {
                t * n as u64 - choose2(t)
            } else {
                t * n as u64 - choose2(t) + 1
            };
            check_extremal(ExtremalKind::U1Symmetric, spec, n, k, choose2(k as u64 + 1), cap, &mut report);
            check_extremal(ExtremalKind::U2Symmetric, spec, n, k, u2_dim, cap, &mut report);
            let us = u_s(n as u64, k as u64).expect("valid parameters");
            let expected = choose2(k as u64 + 1).max(u2_dim);
            report.record(
                us == expected,
                "",
                &format!("u_s({n},{k}) = max of the family dimensions = {expected}"),
                &format!("{us}"),
            );
        }
    }
    let kinds =
        [RandomKind::Symmetric, RandomKind::Alternating, RandomKind::DisjointSupportWs];
    for trial in 0..trials {
        let mut rng = SplitMix64::derive(seed, trial);
        let space = draw_space(&kinds, spec, n_max, 6, &mut rng);
        let text = space.serialize();
        let n = space.n() as u64;
        let graph = space.leading_graph().expect("structured spaces have leading graphs");
        let (rho, _) = match space.max_rank_oracle(cap) {
            Ok(r) => r,
            Err(e) => {
                report.record(false, &text, "an oracle rank", &e.to_string());
                continue;
            }
        };
        if graph.mu() > rho {
            report.record(false, &text, "mu(G_S) <= rho(S)", &format!("mu={} rho={rho}", graph.mu()));
            continue;
        }
        let dim = space.canonicalize().expect("generated spaces canonicalize").space.dim() as u64;
        let bound = u_s(n, rho as u64).expect("rho <= n");
        if dim > bound {
            report.record(
                false,
                &text,
                &format!("dim <= u_s({n},{rho}) = {bound}"),
                &format!("dim = {dim}"),
            );
            continue;
        }
        report.record(true, "", "", "");
    }
    Ok(report)
}

fn graph_text(g: &LoopGraph) -> String {
    format!("graph on {} vertices: {}", g.n(), g)
}

/// Exhaustive edge-count bounds: every graph with matching cover k satisfies
/// the u_a / u_s bound, and the bound is attained for every feasible k.
pub fn verify_erdos_gallai(n: usize, loops: bool) -> Result<VerificationReport, SuiteError> {
    let max_n = if loops { 5 } else { 6 };
    if n > max_n {
        return Err(SuiteError::InvalidParams(format!(
            "exhaustive enumeration is limited to n <= {max_n} (loops: {loops})"
        )));
    }
    let mut report =
        VerificationReport::new("erdos-gallai", &[("n", n as u64), ("loops", loops as u64)]);
    let mut max_edges: BTreeMap<usize, u64> = BTreeMap::new();
    for graph in enumerate_graphs(n, loops).map_err(|e| SuiteError::InvalidParams(e.to_string()))? {
        let k = graph.mu();
        let edges = graph.edge_count() as u64;
        let entry = max_edges.entry(k).or_insert(0);
        *entry = (*entry).max(edges);
        let bound = if loops {
            u_s(n as u64, k as u64).expect("mu <= n")
        } else if k < n {
            u_a(n as u64, k as u64).expect("mu < n, even")
        } else {
            report.pass += 1;
            continue;
        };
        if edges > bound {
            report.record(
                false,
                &graph_text(&graph),
                &format!("|G| <= {bound} for mu = {k}"),
                &format!("|G| = {edges}"),
            );
        } else {
            report.pass += 1;
        }
    }
    // Tightness for every feasible k.
    if loops {
        for k in 0..=n {
            let bound = u_s(n as u64, k as u64).expect("k <= n");
            let got = max_edges.get(&k).copied().unwrap_or(0);
            report.record(
                got == bound,
                "",
                &format!("a graph with mu = {k} and |G| = u_s({n},{k}) = {bound}"),
                &format!("max |G| = {got}"),
            );
        }
    } else {
        for k in (0..n).step_by(2) {
            let bound = u_a(n as u64, k as u64).expect("k < n, even");
            let got = max_edges.get(&k).copied().unwrap_or(0);
            report.record(
                got == bound,
                "",
                &format!("a graph with mu = {k} and |G| = u_a({n},{k}) = {bound}"),
                &format!("max |G| = {got}"),
            );
        }
    }
    Ok(report)
}

/// The fixed sequence of suites behind `verify all`.
pub fn verify_all(trials: u64, seed: u64, cap: u64) -> Result<Vec<VerificationReport>, SuiteError> {
    Ok(vec![
        verify_counterexamples_f2(),
        verify_thm1(6, 3, 5, trials, seed, cap)?,
        verify_thm1(6, 5, 5, trials, seed, cap)?,
        verify_thm2(6, 2, 5, trials, seed, cap)?,
        verify_thm2(6, 3, 5, trials, seed, cap)?,
        verify_cor3(5, 4, trials, seed, cap)?,
        verify_thm4(6, 6, 2, trials, seed, cap)?,
        verify_thm5(6, 6, 3, trials, seed, cap)?,
        verify_erdos_gallai(5, false)?,
        verify_erdos_gallai(4, true)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counterexamples_pass() {
        let report = verify_counterexamples_f2();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.pass, 2);
    }

    #[test]
    fn small_thm1_suite_passes() {
        let report = verify_thm1(5, 3, 4, 30, 42, 1_000_000).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.skip, 0);
        assert_eq!(report.pass, 30);
    }

    #[test]
    fn small_thm2_suite_passes() {
        for p in [2, 3] {
            let report = verify_thm2(6, p, 4, 30, 42, 1_000_000).unwrap();
            assert!(report.passed(), "{}", report.render_text());
            assert_eq!(report.pass, 30);
        }
    }

    #[test]
    fn small_cor3_suite_passes() {
        let report = verify_cor3(4, 3, 30, 42, 1_000_000).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn small_thm45_suites_pass() {
        let r4 = verify_thm4(5, 5, 3, 20, 42, 1_000_000).unwrap();
        assert!(r4.passed(), "{}", r4.render_text());
        let r5 = verify_thm5(5, 5, 3, 20, 42, 1_000_000).unwrap();
        assert!(r5.passed(), "{}", r5.render_text());
    }

    #[test]
    fn erdos_gallai_small() {
        let r = verify_erdos_gallai(4, false).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let r = verify_erdos_gallai(3, true).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(verify_erdos_gallai(7, false).is_err());
    }

    #[test]
    fn invalid_params_are_rejected() {
        assert!(matches!(verify_thm1(5, 2, 4, 10, 42, 1000), Err(SuiteError::InvalidParams(_))));
        assert!(matches!(verify_thm5(5, 5, 2, 10, 42, 1000), Err(SuiteError::InvalidParams(_))));
    }

    #[test]
    fn reports_serialize_with_stable_keys() {
        let report = verify_counterexamples_f2();
        let a = serde_json::to_string_pretty(&report).unwrap();
        let b = serde_json::to_string_pretty(&report).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"suite\""));
    }
}
