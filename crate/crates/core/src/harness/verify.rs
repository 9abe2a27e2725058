use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{rat, Rational, SymmetricForm};
use crate::covers::{cover_invariants, h1_order_pfold, h1_report, verify_affine_law, verify_corollary1, AffineFit};
use crate::jones::{jones, jones_at_minus1, verify_skein_values};
use crate::lescop::{lescop_lambda, FramedLink, ZetaProvider};
use crate::links::{make_unlink, skein_triple, twisted_double, BraidWord, Clasp, CrossingSite};
use crate::report::{Check, Report};
use crate::seifert::{alexander_conway, double_seifert_matrix, knot_delta_second, seifert_matrix};
use crate::symforms::{check_inertia_pair, det_relation, inertia_both_orders, verify_bordered_lemma, BorderedTriple};

use super::{CorpusEntry, Golden, HarnessError};

/// Companions of the twisted-double fit, in fit order.
pub const AFFINE_COMPANIONS: [(&str, &str); 4] =
    [("unknot", "2; 1"), ("3_1", "2; 1 1 1"), ("4_1", "3; 1 -2 1 -2"), ("5_2", "3; 1 1 1 2 -1 2")];
pub const AFFINE_TWISTS: [i64; 5] = [-2, -1, 0, 1, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Skein,
    H1,
    Bordered,
    Corollary1,
    Affine,
    LescopCalibration,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Skein,
        CheckKind::H1,
        CheckKind::Bordered,
        CheckKind::Corollary1,
        CheckKind::Affine,
        CheckKind::LescopCalibration,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Skein => "skein",
            CheckKind::H1 => "h1",
            CheckKind::Bordered => "bordered",
            CheckKind::Corollary1 => "corollary1",
            CheckKind::Affine => "affine",
            CheckKind::LescopCalibration => "lescop-calibration",
        }
    }

    /// Comma-separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<CheckKind>, HarnessError> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Self::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| HarnessError::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub checks: Vec<CheckKind>,
    /// worker threads; `None` uses rayon's default
    pub jobs: Option<usize>,
    pub bordered_samples: usize,
    pub seed: u64,
    pub golden: Option<Golden>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { checks: CheckKind::ALL.to_vec(), jobs: None, bordered_samples: 1000, seed: 0x5eed, golden: None }
    }
}

/// One row of the invariant table. Exact values are kept as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRow {
    pub name: String,
    pub braid: String,
    pub components: usize,
    pub jones: String,
    pub sigma: Option<i64>,
    pub nu: Option<usize>,
    pub sign: Option<i8>,
    pub det: Option<String>,
    pub delta_second: Option<String>,
    pub lambda2: Option<String>,
    /// `|H₁(Σ²)|`, `infinite` when the nullity is positive
    pub h1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub row: InvariantRow,
    pub checks: Vec<(CheckKind, Report)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub report: Report,
}

impl SuiteReport {
    fn new(suite: impl Into<String>, report: Report) -> Self {
        let failed = report.failures().count();
        Self { suite: suite.into(), passed: report.checks.len() - failed, failed, report }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub rows: Vec<InvariantRow>,
    pub suites: Vec<SuiteReport>,
    pub affine: Vec<AffineFit>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(|s| s.failed == 0)
    }

    pub fn failed(&self) -> usize {
        self.suites.iter().map(|s| s.failed).sum()
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == name)
    }
}

fn err_check(name: impl Into<String>, e: impl fmt::Display) -> Report {
    let mut r = Report::new();
    r.push(Check::fail(name, e.to_string()));
    r
}

fn prefixed(prefix: &str, mut r: Report) -> Report {
    for c in &mut r.checks {
        c.name = format!("{prefix}: {}", c.name);
    }
    r
}

/// Invariant row for one braid; failures land in `error`.
pub fn compute_row(name: &str, braid: &BraidWord) -> InvariantRow {
    let b = braid.connected_representative();
    let mut row = InvariantRow {
        name: name.to_string(),
        braid: braid.to_string(),
        components: braid.components(),
        jones: String::new(),
        sigma: None,
        nu: None,
        sign: None,
        det: None,
        delta_second: None,
        lambda2: None,
        h1: None,
        error: None,
    };
    match jones(&b) {
        Ok(j) => row.jones = j.poly.to_string(),
        Err(e) => row.error = Some(e.to_string()),
    }
    match seifert_matrix(&b) {
        Ok(e) => {
            let inv = e.inertia();
            let det = e.symmetrized().det().abs();
            row.sigma = Some(inv.signature);
            row.nu = Some(inv.nullity);
            row.sign = Some(inv.sign);
            row.h1 = Some(if inv.nullity > 0 { "infinite".to_string() } else { det.to_string() });
            row.det = Some(det.to_string());
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    if row.components == 1 {
        match knot_delta_second(&b) {
            Ok(d) => row.delta_second = Some(d.to_string()),
            Err(e) => row.error = Some(e.to_string()),
        }
    }
    match cover_invariants(&b) {
        Ok(c) => row.lambda2 = Some(c.lambda2.to_string()),
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

fn skein_checks(e: &CorpusEntry) -> Report {
    let mut r = Report::new();
    for site in 0..e.braid.len() {
        let label = format!("{} site {}", e.name, site);
        let t = match skein_triple(&e.braid, CrossingSite(site)) {
            Ok(t) => t,
            Err(err) => {
                r.extend(err_check(label, err));
                continue;
            }
        };
        match (jones(&t.plus), jones(&t.minus), jones(&t.zero)) {
            (Ok(p), Ok(m), Ok(z)) => r.extend(prefixed(&label, verify_skein_values(&p, &m, &z))),
            (Err(err), _, _) | (_, Err(err), _) | (_, _, Err(err)) => r.extend(err_check(label, err)),
        }
    }
    r
}

fn h1_checks(e: &CorpusEntry) -> Report {
    let b = e.braid.connected_representative();
    let run = || -> Result<Report, crate::covers::CoverError> {
        let s = seifert_matrix(&b)?;
        let (value, _) = jones_at_minus1(&jones(&b)?);
        let inv = s.inertia();
        let mut r = h1_report(&value, &inv, &s.symmetrized().det().abs());
        r.push(Check::expect("nu > 0 iff J(-1) = 0", (inv.nullity > 0) == value.is_zero(), || {
            format!("nu = {}, J(-1) = {}", inv.nullity, value)
        }));
        Ok(r)
    };
    match run() {
        Ok(r) => prefixed(&e.name, r),
        Err(err) => err_check(format!("{}: h1", e.name), err),
    }
}

/// Symmetrized Seifert forms of skein triples. The two bases differ by a
/// unimodular change, so only basis-independent relations are compared.
fn bordered_skein_checks(e: &CorpusEntry) -> Report {
    let mut r = Report::new();
    for site in 0..e.braid.len() {
        let label = format!("{} site {}", e.name, site);
        let Ok(t) = skein_triple(&e.braid, CrossingSite(site)) else { continue };
        // the smoothing is only bordered when it keeps the surface connected
        if !t.zero.missing_generators().is_empty() {
            r.push(Check::pass(format!("{label}: smoothing disconnects the surface, not applicable")));
            continue;
        }
        let forms = (seifert_matrix(&t.plus), seifert_matrix(&t.minus), seifert_matrix(&t.zero));
        let (Ok(p), Ok(m), Ok(z)) = forms else {
            r.push(Check::fail(format!("{label}: seifert forms"), "Seifert matrix unavailable"));
            continue;
        };
        let (p, m, z) = (p.symmetrized(), m.symmetrized(), z.symmetrized());
        let (ip, im, iz) = (crate::symforms::inertia(&p), crate::symforms::inertia(&m), crate::symforms::inertia(&z));
        r.extend(prefixed(&label, check_inertia_pair("A+", &ip, &iz)));
        r.extend(prefixed(&label, check_inertia_pair("A-", &im, &iz)));
        let total = p.det() - m.det() + z.det() * rat(2);
        r.push(Check::expect(format!("{label}: determinant relation"), total == rat(0), || total.to_string()));
    }
    r
}

fn corollary1_checks(e: &CorpusEntry) -> Report {
    match verify_corollary1(&e.braid.connected_representative()) {
        Ok(r) => prefixed(&e.name, r),
        Err(err) => err_check(format!("{}: corollary1", e.name), err),
    }
}

fn lambda_real_check(row: &InvariantRow) -> Report {
    let mut r = Report::new();
    r.push(Check::expect(format!("{}: lambda2 is real", row.name), row.lambda2.is_some(), || {
        row.error.clone().unwrap_or_default()
    }));
    r
}

fn run_entry(e: &CorpusEntry, checks: &[CheckKind]) -> EntryReport {
    let row = compute_row(&e.name, &e.braid);
    let mut out = Vec::new();
    for &k in checks {
        let r = match k {
            CheckKind::Skein => skein_checks(e),
            CheckKind::H1 => h1_checks(e),
            CheckKind::Bordered => bordered_skein_checks(e),
            CheckKind::Corollary1 => corollary1_checks(e),
            CheckKind::LescopCalibration => lambda_real_check(&row),
            CheckKind::Affine => continue,
        };
        out.push((k, r));
    }
    EntryReport { row, checks: out }
}

fn random_form(rng: &mut ChaCha8Rng, n: usize) -> SymmetricForm {
    let mut m = vec![vec![Rational::from_integer(0.into()); n]; n];
    for i in 0..n {
        for j in i..n {
            let x = rat(rng.gen_range(-5..=5));
            m[i][j] = x.clone();
            m[j][i] = x;
        }
    }
    SymmetricForm::new(m).expect("symmetric by construction")
}

/// Random bordered triples of total dimension at most 6, entries in [-5, 5].
pub fn random_bordered_checks(samples: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = [0usize; 3];
    let mut first_failure: [Option<String>; 3] = Default::default();
    for k in 0..samples {
        let d = rng.gen_range(0..=5);
        let a0 = random_form(&mut rng, d);
        let rho = (0..d).map(|_| rat(rng.gen_range(-5..=5))).collect();
        let t = BorderedTriple::new(rat(rng.gen_range(-5..=5)), rho, a0);
        let lemma = verify_bordered_lemma(&t);
        let det = det_relation(&t);
        let pivots_agree = [t.plus(), t.minus(), t.zero().clone()].iter().all(|s| {
            let (a, b) = inertia_both_orders(s);
            a == b
        });
        for (slot, ok, witness) in [
            (0, lemma.all_passed(), lemma.failures().next().and_then(|c| c.witness.clone())),
            (1, det.all_passed(), det.failures().next().and_then(|c| c.witness.clone())),
            (2, pivots_agree, Some(format!("triple {k}: pivot orders disagree"))),
        ] {
            if ok {
                counts[slot] += 1;
            } else if first_failure[slot].is_none() {
                first_failure[slot] = Some(format!("triple {k}: {}", witness.unwrap_or_default()));
            }
        }
    }
    let names = ["inertia relations", "determinant relation", "pivot orders agree"];
    let mut r = Report::new();
    for i in 0..3 {
        r.push(Check::expect(format!("random bordered triples: {} ({}/{})", names[i], counts[i], samples), counts[i] == samples, || {
            first_failure[i].clone().unwrap_or_default()
        }));
    }
    r
}

fn lescop_calibration() -> Report {
    let mut r = Report::new();
    let zero = ZetaProvider::zero();
    let cases = [("empty link", FramedLink::empty()), ("+1-framed unknot", FramedLink::unknot(1)), ("-1-framed unknot", FramedLink::unknot(-1))];
    for (label, link) in cases {
        match lescop_lambda(&link, &zero) {
            Ok(l) => r.push(Check::expect(format!("lescop: {label} gives 0"), l == rat(0), || l.to_string())),
            Err(e) => r.extend(err_check(format!("lescop: {label}"), e)),
        }
    }
    let from_covers = |b: &BraidWord| cover_invariants(b).map(|c| c.lambda2);
    match from_covers(&make_unlink(1)) {
        Ok(l) => r.push(Check::expect("lambda2(unknot) = 0", l == rat(0), || l.to_string())),
        Err(e) => r.extend(err_check("lambda2(unknot)", e)),
    }
    let sixth = Rational::new((-1).into(), 6.into());
    match (from_covers(&make_unlink(2)), lescop_lambda(&FramedLink::unknot(0), &zero)) {
        (Ok(a), Ok(b)) => {
            r.push(Check::expect("lambda2(2-unlink) = -1/6", a == sixth, || a.to_string()));
            r.push(Check::expect("lambda2(2-unlink) = lescop(0-framed unknot)", a == b, || format!("{a} vs {b}")));
        }
        (Err(e), _) => r.extend(err_check("lambda2(2-unlink)", e)),
        (_, Err(e)) => r.extend(err_check("lescop(0-framed unknot)", e)),
    }
    r
}

fn affine_suite() -> (Report, Vec<AffineFit>) {
    let knots: Vec<BraidWord> = AFFINE_COMPANIONS.iter().map(|(_, b)| BraidWord::parse(b).expect("valid")).collect();
    let mut r = Report::new();
    let fits: Vec<_> = AFFINE_TWISTS.par_iter().map(|&m| (m, verify_affine_law(m, &knots, Clasp::Positive))).collect();
    let mut out = Vec::new();
    for (m, fit) in fits {
        match fit {
            Ok(mut f) => {
                for (p, (name, _)) in f.points.iter_mut().zip(AFFINE_COMPANIONS) {
                    p.companion = name.to_string();
                }
                for (c, (name, _)) in f.report.checks.iter_mut().zip(AFFINE_COMPANIONS) {
                    c.name = format!("affine law m = {m}: residual of {name} is 0");
                }
                r.extend(f.report.clone());
                out.push(f);
            }
            Err(e) => r.extend(err_check(format!("affine law m = {m}"), e)),
        }
    }
    // p-fold homology orders of doubles depend only on the twisting
    for m in [-1i64, 0, 1] {
        for p in [2usize, 3] {
            let orders: Vec<String> = knots[..3]
                .iter()
                .map(|k| {
                    let d = twisted_double(k, m, Clasp::Positive).expect("companions are knots");
                    let delta = alexander_conway(&double_seifert_matrix(&d)).in_t().expect("knot");
                    h1_order_pfold(&delta, p).to_string()
                })
                .collect();
            r.push(Check::expect(
                format!("p-fold H1 order of doubles independent of companion (m = {m}, p = {p})"),
                orders.windows(2).all(|w| w[0] == w[1]),
                || orders.join(" vs "),
            ));
        }
    }
    (r, out)
}

fn golden_suite(g: &Golden, rows: &[InvariantRow], fits: &[AffineFit], with_affine: bool) -> Report {
    let mut r = Report::new();
    for row in rows {
        if let Some(want) = g.lambda2.get(&row.name) {
            let got = row.lambda2.as_deref().unwrap_or("error");
            r.push(Check::expect(format!("golden lambda2 {}", row.name), got == want, || format!("{got} vs golden {want}")));
        }
    }
    if with_affine {
        for f in fits {
            if let Some((a, b)) = g.affine.get(&f.m) {
                let (ga, gb) = (f.a.to_string(), f.b.to_string());
                r.push(Check::expect(format!("golden affine m = {}", f.m), &ga == a && &gb == b, || {
                    format!("({ga}, {gb}) vs golden ({a}, {b})")
                }));
            }
        }
    }
    r
}

/// Run the selected suites over a corpus. Entry work runs on a pool of
/// `config.jobs` threads, and results are merged in corpus order.
pub fn run_verification(corpus: &[CorpusEntry], config: &VerifyConfig) -> Result<VerificationReport, HarnessError> {
    if corpus.is_empty() {
        return Err(HarnessError::EmptyCorpus);
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = config.jobs {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build().map_err(|e| HarnessError::Io(e.to_string()))?;
    let checks = &config.checks;
    let has = |k: CheckKind| checks.contains(&k);
    pool.install(|| {
        let entries: Vec<EntryReport> = corpus.par_iter().map(|e| run_entry(e, checks)).collect();
        let mut suites = Vec::new();
        let mut affine = Vec::new();
        for &k in checks {
            let mut r = Report::new();
            for e in &entries {
                if let Some((_, er)) = e.checks.iter().find(|(kk, _)| *kk == k) {
                    r.extend(er.clone());
                }
            }
            match k {
                CheckKind::Bordered => r.extend(random_bordered_checks(config.bordered_samples, config.seed)),
                CheckKind::LescopCalibration => r.extend(lescop_calibration()),
                CheckKind::Affine => {
                    let (rep, fits) = affine_suite();
                    r.extend(rep);
                    affine = fits;
                }
                _ => {}
            }
            suites.push(SuiteReport::new(k.name(), r));
        }
        let rows: Vec<InvariantRow> = entries.into_iter().map(|e| e.row).collect();
        if let Some(g) = &config.golden {
            suites.push(SuiteReport::new("golden", golden_suite(g, &rows, &affine, has(CheckKind::Affine))));
        }
        Ok(VerificationReport { rows, suites, affine })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::parse_corpus;

    fn config(checks: &[CheckKind]) -> VerifyConfig {
        VerifyConfig { checks: checks.to_vec(), bordered_samples: 50, ..Default::default() }
    }

    #[test]
    fn unknot_h1() {
        let c = parse_corpus("unknot | 2; 1 | knot").unwrap();
        let r = run_verification(&c, &config(&[CheckKind::H1])).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.rows[0].h1.as_deref(), Some("1"));
        assert_eq!(r.rows[0].lambda2.as_deref(), Some("0"));
    }

    #[test]
    fn empty_corpus_is_an_error() {
        assert_eq!(run_verification(&[], &VerifyConfig::default()), Err(HarnessError::EmptyCorpus));
    }

    #[test]
    fn check_lists() {
        assert_eq!(CheckKind::parse_list("h1,skein").unwrap(), vec![CheckKind::Skein, CheckKind::H1]);
        assert_eq!(CheckKind::parse_list("all").unwrap(), CheckKind::ALL.to_vec());
        assert_eq!(CheckKind::parse_list("h2"), Err(HarnessError::UnknownCheck("h2".into())));
    }

    #[test]
    fn random_bordered_small_run() {
        assert!(random_bordered_checks(100, 3).all_passed());
    }

    #[test]
    fn jobs_do_not_change_the_report() {
        let c = parse_corpus("hopf | 2; 1 1\n3_1 | 2; 1 1 1\nu3 | 3; 1 -1 2 -2\n").unwrap();
        let ks = [CheckKind::Skein, CheckKind::H1, CheckKind::Bordered, CheckKind::Corollary1];
        let one = run_verification(&c, &VerifyConfig { jobs: Some(1), ..config(&ks) }).unwrap();
        let four = run_verification(&c, &VerifyConfig { jobs: Some(4), ..config(&ks) }).unwrap();
        assert_eq!(one, four);
        assert!(one.all_passed());
    }
}
