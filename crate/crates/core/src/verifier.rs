//! Exhaustive verification of the extremal statements over enumerated
//! classes: size-t maxima against the bipartite formula, equality-class
//! characterizations, vertex-critical strictness, total-count maxima
//! against the multipartite construction, and the structural identities
//! behind them.
//!
//! All checks are deterministic given their parameters: class scans run in
//! parallel but reduce to (max, achiever set) with an associative merge and
//! a final canonical sort. `runtime_seconds` stays `None` at this layer so
//! reports from serial and sharded runs compare byte for byte; front ends
//! may stamp it.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::constructions;
use crate::counting::{
    count_independent_sets_of_size, extremal_value, independence_vector, total_independent_sets,
};
use crate::enumeration::{enumerate, EnumSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Version tag stamped into every JSON report.
pub const REPORT_SCHEMA: &str = "indsets-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
}

/// Class-count and size caps for a scan; exceeding them aborts with
/// [`Error::BudgetExceeded`], never a silent truncation.
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct Budget {
    #[serde(default)]
    pub max_classes: Option<usize>,
    /// Opt-in for n = 10 enumerations.
    #[serde(default)]
    pub allow_large: bool,
}

impl Budget {
    fn spec(&self, n: usize, delta: usize) -> EnumSpec {
        let mut spec = EnumSpec::new(n, delta);
        spec.allow_large = self.allow_large;
        spec
    }

    fn admit(&self, classes: &[Graph]) -> Result<()> {
        if let Some(cap) = self.max_classes {
            if classes.len() > cap {
                return Err(Error::BudgetExceeded(format!(
                    "{} classes exceed the cap of {}",
                    classes.len(),
                    cap
                )));
            }
        }
        Ok(())
    }
}

/// Outcome of a max-versus-extremal scan.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub check: String,
    pub n: usize,
    pub delta: usize,
    /// `None` means the total count i(G) rather than a fixed size.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub extremal_value: u64,
    pub observed_max: u64,
    pub verdict: Verdict,
    /// graph6 of every class attaining `observed_max`, canonically sorted.
    pub achievers: Vec<String>,
    /// graph6 of every class exceeding `extremal_value` when violated.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<String>,
    pub classes_scanned: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_seconds: Option<f64>,
}

/// Outcome of a zero-violations property sweep (identities, implications,
/// strictness clauses).
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct PropertyReport {
    pub schema: &'static str,
    pub check: String,
    pub n: usize,
    pub delta: usize,
    pub verdict: Verdict,
    /// graph6 of classes violating the property.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
    pub classes_scanned: usize,
    /// True when the scanned class list was empty, so "holds" is vacuous.
    pub vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_seconds: Option<f64>,
}

/// Outcome of comparing an achiever set with a theorem's predicted family.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct EqualityClassReport {
    pub schema: &'static str,
    pub check: String,
    pub n: usize,
    pub delta: usize,
    pub t: usize,
    /// Predicted extremal family as graph6; `None` when no theorem covers
    /// this (n, delta, t).
    pub prediction: Option<Vec<String>>,
    pub achievers: Vec<String>,
    /// Agreement with the prediction; `None` without one.
    pub matches: Option<bool>,
    /// Predicted but not achieving.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub missing: Vec<String>,
    /// Achieving but not predicted.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unexpected: Vec<String>,
    pub classes_scanned: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_seconds: Option<f64>,
}

/// Canonically sorted graph6 strings for a set of graphs.
fn graph6_set(graphs: &[Graph]) -> Vec<String> {
    let mut out: Vec<String> = graphs
        .iter()
        .map(|g| graph6::encode(&g.canonicalize()).expect("desk-scale graphs encode"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Evaluates `value` on every class in parallel and reduces to the maximum
/// and the classes attaining it.
fn scan_max(
    classes: &[Graph],
    value: impl Fn(&Graph) -> Result<u64> + Sync,
) -> Result<(u64, Vec<Graph>)> {
    let values: Vec<u64> = classes
        .par_iter()
        .map(&value)
        .collect::<Result<Vec<u64>>>()?;
    let max = values.iter().copied().max().unwrap_or(0);
    let achievers: Vec<Graph> = classes
        .iter()
        .zip(&values)
        .filter(|&(_, &v)| v == max)
        .map(|(g, _)| g.clone())
        .collect();
    Ok((max, achievers))
}

/// Max of i_t over G(n, delta) against i_t(K_{delta,n-delta}).
pub fn check_size_t(
    n: usize,
    delta: usize,
    t: usize,
    budget: &Budget,
) -> Result<VerificationReport> {
    let classes = enumerate(&budget.spec(n, delta))?;
    budget.admit(&classes)?;
    let bound = extremal_value(n, delta, t)?;
    let (observed_max, achievers) = scan_max(&classes, |g| count_independent_sets_of_size(g, t))?;
    let counterexamples: Vec<Graph> = if observed_max > bound {
        let over: Vec<Graph> = classes
            .par_iter()
            .filter(|g| {
                count_independent_sets_of_size(g, t)
                    .map(|c| c > bound)
                    .unwrap_or(false)
            })
            .cloned()
            .collect();
        over
    } else {
        Vec::new()
    };
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        check: "size_t".into(),
        n,
        delta,
        t: Some(t),
        extremal_value: bound,
        observed_max,
        verdict: if observed_max <= bound {
            Verdict::Holds
        } else {
            Verdict::Violated
        },
        achievers: graph6_set(&achievers),
        counterexamples: graph6_set(&counterexamples),
        classes_scanned: classes.len(),
        runtime_seconds: None,
    })
}

/// The family predicted to attain i_t(K_{delta,n-delta}) at (n, delta, t),
/// generated constructively; `None` where no theorem makes a prediction.
pub fn predicted_equality_family(n: usize, delta: usize, t: usize) -> Result<Option<Vec<Graph>>> {
    let family = if delta == 2 && n >= 5 && (3..=n.saturating_sub(2)).contains(&t) {
        Some(vec![
            constructions::complete_bipartite(2, n - 2)?,
            constructions::extremal_plus_inside_edges(2, n, &[(0, 1)])?,
        ])
    } else if delta == 3 && t == 3 && n >= 6 {
        Some(vec![constructions::complete_bipartite(3, n - 3)?])
    } else if delta == 3 && n >= 7 && (4..=n.saturating_sub(3)).contains(&t) {
        Some(inside_edge_family(3, n)?)
    } else if delta >= 3 && n > 3 * delta && (2 * delta + 1..=n.saturating_sub(delta)).contains(&t)
    {
        Some(inside_edge_family(delta, n)?)
    } else {
        None
    };
    Ok(family)
}

/// K_{delta,n-delta} plus every subset of edges inside the small part, one
/// representative per isomorphism class.
fn inside_edge_family(delta: usize, n: usize) -> Result<Vec<Graph>> {
    let pairs: Vec<(usize, usize)> = (0..delta)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e)
            .collect();
        out.push(constructions::extremal_plus_inside_edges(
            delta, n, &chosen,
        )?);
    }
    let mut forms: Vec<(crate::canon::CanonicalForm, Graph)> =
        out.into_iter().map(|g| (canonical_form(&g), g)).collect();
    forms.sort_by(|a, b| a.0.cmp(&b.0));
    forms.dedup_by(|a, b| a.0 == b.0);
    Ok(forms.into_iter().map(|(_, g)| g).collect())
}

/// Achiever set of i_t over G(n, delta) compared against the theorem's
/// predicted family, as canonical-form sets.
pub fn check_equality_class(
    n: usize,
    delta: usize,
    t: usize,
    budget: &Budget,
) -> Result<EqualityClassReport> {
    let classes = enumerate(&budget.spec(n, delta))?;
    budget.admit(&classes)?;
    let bound = extremal_value(n, delta, t)?;
    let achievers: Vec<Graph> = {
        let values: Vec<u64> = classes
            .par_iter()
            .map(|g| count_independent_sets_of_size(g, t))
            .collect::<Result<Vec<u64>>>()?;
        classes
            .iter()
            .zip(&values)
            .filter(|&(_, &v)| v == bound)
            .map(|(g, _)| g.clone())
            .collect()
    };
    let achieved = graph6_set(&achievers);
    let prediction = predicted_equality_family(n, delta, t)?.map(|f| graph6_set(&f));
    let (matches, missing, unexpected) = match &prediction {
        None => (None, Vec::new(), Vec::new()),
        Some(pred) => {
            let missing: Vec<String> = pred
                .iter()
                .filter(|p| !achieved.contains(p))
                .cloned()
                .collect();
            let unexpected: Vec<String> = achieved
                .iter()
                .filter(|a| !pred.contains(a))
                .cloned()
                .collect();
            (
                Some(missing.is_empty() && unexpected.is_empty()),
                missing,
                unexpected,
            )
        }
    };
    Ok(EqualityClassReport {
        schema: REPORT_SCHEMA,
        check: "equality_class".into(),
        n,
        delta,
        t,
        prediction,
        achievers: achieved,
        matches,
        missing,
        unexpected,
        classes_scanned: classes.len(),
        runtime_seconds: None,
    })
}

/// Strict inequality i_t(G) < i_t(K_{delta,n-delta}) over vertex-critical
/// classes only.
pub fn check_vertex_critical_strict(
    n: usize,
    delta: usize,
    t: usize,
    budget: &Budget,
) -> Result<VerificationReport> {
    let mut spec = budget.spec(n, delta);
    spec.vertex_critical_only = true;
    let classes = enumerate(&spec)?;
    budget.admit(&classes)?;
    let bound = extremal_value(n, delta, t)?;
    let (observed_max, achievers) = scan_max(&classes, |g| count_independent_sets_of_size(g, t))?;
    let strict = classes.is_empty() || observed_max < bound;
    let counterexamples: Vec<Graph> = if strict {
        Vec::new()
    } else {
        achievers.clone()
    };
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        check: "vertex_critical_strict".into(),
        n,
        delta,
        t: Some(t),
        extremal_value: bound,
        observed_max,
        verdict: if strict {
            Verdict::Holds
        } else {
            Verdict::Violated
        },
        achievers: graph6_set(&achievers),
        counterexamples: graph6_set(&counterexamples),
        classes_scanned: classes.len(),
        runtime_seconds: None,
    })
}

/// Among critical delta=3 classes containing a vertex of degree >= n-3,
/// i_3 stays strictly below the extremal value; vacuous truth is reported
/// explicitly when no class qualifies.
pub fn check_no_high_degree_equality(n: usize, budget: &Budget) -> Result<PropertyReport> {
    let delta = 3;
    let mut spec = budget.spec(n, delta);
    spec.critical_only = true;
    let all = enumerate(&spec)?;
    budget.admit(&all)?;
    let classes: Vec<Graph> = all
        .into_iter()
        .filter(|g| g.max_degree() + 3 >= n)
        .collect();
    let bound = extremal_value(n, delta, 3)?;
    let violations: Vec<Graph> = classes
        .par_iter()
        .filter(|g| {
            count_independent_sets_of_size(g, 3)
                .map(|c| c >= bound)
                .unwrap_or(true)
        })
        .cloned()
        .collect();
    Ok(PropertyReport {
        schema: REPORT_SCHEMA,
        check: "no_high_degree_equality".into(),
        n,
        delta,
        verdict: if violations.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Violated
        },
        violations: graph6_set(&violations),
        classes_scanned: classes.len(),
        vacuous: classes.is_empty(),
        runtime_seconds: None,
    })
}

/// Max of the total count i(G) over G(n, delta) against the conjectured
/// multipartite extremal construction.
pub fn check_total_count(n: usize, delta: usize, budget: &Budget) -> Result<VerificationReport> {
    let classes = enumerate(&budget.spec(n, delta))?;
    budget.admit(&classes)?;
    let bound = total_independent_sets(&constructions::conjecture_multipartite(n, delta)?)?;
    let (observed_max, achievers) = scan_max(&classes, total_independent_sets)?;
    let counterexamples: Vec<Graph> = if observed_max > bound {
        classes
            .par_iter()
            .filter(|g| {
                total_independent_sets(g)
                    .map(|c| c > bound)
                    .unwrap_or(false)
            })
            .cloned()
            .collect()
    } else {
        Vec::new()
    };
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        check: "total_count".into(),
        n,
        delta,
        t: None,
        extremal_value: bound,
        observed_max,
        verdict: if observed_max <= bound {
            Verdict::Holds
        } else {
            Verdict::Violated
        },
        achievers: graph6_set(&achievers),
        counterexamples: graph6_set(&counterexamples),
        classes_scanned: classes.len(),
        runtime_seconds: None,
    })
}

/// The monotone step: wherever i_t(G) <= i_t(K_{delta,n-delta}) for some
/// t >= delta+1, the same holds at t+1; strict stays strict while
/// t < n-delta.
pub fn check_monotone_step(n: usize, delta: usize, budget: &Budget) -> Result<PropertyReport> {
    let classes = enumerate(&budget.spec(n, delta))?;
    budget.admit(&classes)?;
    let bounds: Vec<u64> = (0..=n + 1)
        .map(|t| extremal_value(n, delta, t))
        .collect::<Result<Vec<u64>>>()?;
    let violations: Vec<Graph> = classes
        .par_iter()
        .filter(|g| {
            let v = match independence_vector(g) {
                Ok(v) => v,
                Err(_) => return true,
            };
            for t in delta + 1..=n {
                if v.get(t) <= bounds[t] && v.get(t + 1) > bounds[t + 1] {
                    return true;
                }
                if t < n - delta && v.get(t) < bounds[t] && v.get(t + 1) >= bounds[t + 1] {
                    // strictness clause; only meaningful when the next
                    // level is not identically attained at zero
                    if bounds[t + 1] > 0 || v.get(t + 1) > 0 {
                        return true;
                    }
                }
            }
            false
        })
        .cloned()
        .collect();
    Ok(PropertyReport {
        schema: REPORT_SCHEMA,
        check: "monotone_step".into(),
        n,
        delta,
        verdict: if violations.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Violated
        },
        violations: graph6_set(&violations),
        classes_scanned: classes.len(),
        vacuous: classes.is_empty(),
        runtime_seconds: None,
    })
}

/// The deletion identity i_t(G) = i_t(G-v) + i_{t-1}(G-v-N(v)), for every
/// class, vertex and t.
pub fn check_deletion_identity(n: usize, delta: usize, budget: &Budget) -> Result<PropertyReport> {
    let classes = enumerate(&budget.spec(n, delta))?;
    budget.admit(&classes)?;
    let violations: Vec<Graph> = classes
        .par_iter()
        .filter(|g| !deletion_identity_holds(g))
        .cloned()
        .collect();
    Ok(PropertyReport {
        schema: REPORT_SCHEMA,
        check: "deletion_identity".into(),
        n,
        delta,
        verdict: if violations.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Violated
        },
        violations: graph6_set(&violations),
        classes_scanned: classes.len(),
        vacuous: classes.is_empty(),
        runtime_seconds: None,
    })
}

/// The identity for a single graph, every vertex and every t >= 1.
pub fn deletion_identity_holds(g: &Graph) -> bool {
    let Ok(whole) = independence_vector(g) else {
        return false;
    };
    for v in g.vertices() {
        let Ok(without) = g.delete_vertex(v).and_then(|h| independence_vector(&h)) else {
            return false;
        };
        let Ok(with) = g
            .delete_closed_neighborhood(v)
            .and_then(|h| independence_vector(&h))
        else {
            return false;
        };
        for t in 1..=g.vertex_count() {
            let lhs = whole.get(t);
            let Some(rhs) = without.get(t).checked_add(with.get(t - 1)) else {
                return false;
            };
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// One entry of a verification suite, with the verdict it is expected to
/// produce; known violations (the t = 2 regime) are assertions too.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum SuiteItem {
    SizeT {
        n: usize,
        delta: usize,
        t: usize,
        #[serde(default = "expect_holds")]
        expect: Verdict,
    },
    EqualityClass {
        n: usize,
        delta: usize,
        t: usize,
    },
    VertexCriticalStrict {
        n: usize,
        delta: usize,
        t: usize,
    },
    NoHighDegreeEquality {
        n: usize,
    },
    TotalCount {
        n: usize,
        delta: usize,
        #[serde(default = "expect_holds")]
        expect: Verdict,
    },
    MonotoneStep {
        n: usize,
        delta: usize,
    },
    DeletionIdentity {
        n: usize,
        delta: usize,
    },
}

fn expect_holds() -> Verdict {
    Verdict::Holds
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SuiteConfig {
    #[serde(default)]
    pub items: Vec<SuiteItem>,
    #[serde(default)]
    pub budget: Budget,
}

/// One executed suite entry: the expectation, whether it was met, and the
/// full report as JSON.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteEntry {
    pub item: SuiteItem,
    pub passed: bool,
    pub report: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub schema: &'static str,
    pub passed: bool,
    pub entries: Vec<SuiteEntry>,
}

/// Runs every item; the suite passes iff each report matches its expected
/// verdict (equality-class items expect a matching prediction).
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteResult> {
    let b = &config.budget;
    let mut entries = Vec::new();
    for item in &config.items {
        let (passed, report) = match item {
            SuiteItem::SizeT {
                n,
                delta,
                t,
                expect,
            } => {
                let r = check_size_t(*n, *delta, *t, b)?;
                (r.verdict == *expect, serde_json::to_value(&r)?)
            }
            SuiteItem::EqualityClass { n, delta, t } => {
                let r = check_equality_class(*n, *delta, *t, b)?;
                (r.matches.unwrap_or(true), serde_json::to_value(&r)?)
            }
            SuiteItem::VertexCriticalStrict { n, delta, t } => {
                let r = check_vertex_critical_strict(*n, *delta, *t, b)?;
                (r.verdict == Verdict::Holds, serde_json::to_value(&r)?)
            }
            SuiteItem::NoHighDegreeEquality { n } => {
                let r = check_no_high_degree_equality(*n, b)?;
                (r.verdict == Verdict::Holds, serde_json::to_value(&r)?)
            }
            SuiteItem::TotalCount { n, delta, expect } => {
                let r = check_total_count(*n, *delta, b)?;
                (r.verdict == *expect, serde_json::to_value(&r)?)
            }
            SuiteItem::MonotoneStep { n, delta } => {
                let r = check_monotone_step(*n, *delta, b)?;
                (r.verdict == Verdict::Holds, serde_json::to_value(&r)?)
            }
            SuiteItem::DeletionIdentity { n, delta } => {
                let r = check_deletion_identity(*n, *delta, b)?;
                (r.verdict == Verdict::Holds, serde_json::to_value(&r)?)
            }
        };
        entries.push(SuiteEntry {
            item: item.clone(),
            passed,
            report,
        });
    }
    let passed = entries.iter().all(|e| e.passed);
    Ok(SuiteResult {
        schema: REPORT_SCHEMA,
        passed,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: Budget = Budget {
        max_classes: None,
        allow_large: false,
    };

    #[test]
    fn size_t_holds_with_the_two_achievers() {
        let r = check_size_t(5, 2, 3, &B).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.extremal_value, 1);
        assert_eq!(r.observed_max, 1);
        assert_eq!(r.achievers.len(), 2);
        // achievers re-decode to the reported count
        for s in &r.achievers {
            let g = graph6::decode(s).unwrap();
            assert_eq!(
                count_independent_sets_of_size(&g, 3).unwrap(),
                r.observed_max
            );
        }
    }

    #[test]
    fn size_t_unique_achiever_for_delta_three() {
        let r = check_size_t(6, 3, 3, &B).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(
            r.achievers,
            graph6_set(&[constructions::complete_bipartite(3, 3).unwrap()])
        );
    }

    #[test]
    fn t_two_violation_is_reported() {
        let r = check_size_t(6, 2, 2, &B).unwrap();
        assert_eq!(r.verdict, Verdict::Violated);
        assert_eq!(r.extremal_value, 7);
        assert_eq!(r.observed_max, 9);
        let c6 = graph6_set(&[constructions::cycle(6).unwrap()]);
        assert!(r.achievers.contains(&c6[0]));
        assert!(!r.counterexamples.is_empty());
    }

    #[test]
    fn equality_class_regimes() {
        let r = check_equality_class(7, 2, 4, &B).unwrap();
        assert_eq!(r.matches, Some(true));
        assert_eq!(r.prediction.as_ref().unwrap().len(), 2);

        let r = check_equality_class(7, 3, 4, &B).unwrap();
        assert_eq!(r.matches, Some(true));
        // the 2^3 inside-edge subsets collapse to 4 classes
        assert_eq!(r.prediction.as_ref().unwrap().len(), 4);

        // n = 6, t = 4 has no characterization; achievers still reported
        let r = check_equality_class(6, 3, 4, &B).unwrap();
        assert_eq!(r.matches, None);
        assert!(r.prediction.is_none());

        // vanishing binomial regime: everything attains 0, no prediction
        let r = check_equality_class(7, 3, 7, &B).unwrap();
        assert!(r.prediction.is_none());
        assert_eq!(r.achievers.len(), r.classes_scanned);
    }

    #[test]
    fn vertex_critical_strictness() {
        let r = check_vertex_critical_strict(8, 3, 4, &B).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.extremal_value, 5);
        assert!(r.observed_max <= 4);
        assert!(r.classes_scanned > 0);
    }

    #[test]
    fn high_degree_lemma_small_cases() {
        let r = check_no_high_degree_equality(7, &B).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(
            !r.vacuous,
            "expected critical classes with a high-degree vertex at n=7"
        );
    }

    #[test]
    fn total_counts() {
        let r = check_total_count(5, 2, &B).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.observed_max, 11);
        assert_eq!(
            r.achievers,
            graph6_set(&[
                constructions::cycle(5).unwrap(),
                constructions::complete_bipartite(2, 3).unwrap(),
            ])
        );

        let r = check_total_count(5, 3, &B).unwrap();
        assert_eq!(r.observed_max, 8);
        assert_eq!(r.verdict, Verdict::Holds);

        let r = check_total_count(6, 2, &B).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(
            r.achievers,
            graph6_set(&[constructions::complete_bipartite(2, 4).unwrap()])
        );
    }

    #[test]
    fn monotone_and_deletion_sweeps() {
        for delta in [2, 3] {
            let r = check_monotone_step(7, delta, &B).unwrap();
            assert_eq!(r.verdict, Verdict::Holds, "monotone step delta={}", delta);
        }
        let r = check_deletion_identity(6, 0, &B).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.classes_scanned, 156);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = check_size_t(6, 2, 3, &B).unwrap();
        let b = check_size_t(6, 2, 3, &B).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn budget_cap_aborts() {
        let tight = Budget {
            max_classes: Some(1),
            allow_large: false,
        };
        assert!(matches!(
            check_size_t(6, 2, 3, &tight),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn suite_semantics() {
        let config = SuiteConfig {
            items: vec![
                SuiteItem::SizeT {
                    n: 5,
                    delta: 2,
                    t: 3,
                    expect: Verdict::Holds,
                },
                SuiteItem::SizeT {
                    n: 6,
                    delta: 2,
                    t: 2,
                    expect: Verdict::Violated,
                },
                SuiteItem::EqualityClass {
                    n: 6,
                    delta: 3,
                    t: 3,
                },
            ],
            budget: B,
        };
        let out = run_suite(&config).unwrap();
        assert!(out.passed);
        assert_eq!(out.entries.len(), 3);

        let empty = run_suite(&SuiteConfig::default()).unwrap();
        assert!(empty.passed);
        assert!(empty.entries.is_empty());

        let wrong = SuiteConfig {
            items: vec![SuiteItem::SizeT {
                n: 6,
                delta: 2,
                t: 2,
                expect: Verdict::Holds,
            }],
            budget: B,
        };
        assert!(!run_suite(&wrong).unwrap().passed);
    }
}
