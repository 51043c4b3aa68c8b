//! The identity-verification catalog.
//!
//! Every theorem and lemma surfaced by this crate is checked here against
//! the built-in corpus (or against a single object loaded from a file),
//! with exact integer arithmetic and zero tolerance. Each catalog entry
//! aggregates its instances into one [`CheckResult`] carrying the first
//! failure witness, and the report order is fixed by the catalog, so runs
//! with equal seeds render byte-identical reports.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::broken_circuits::{
    broken_circuits, cancellation_sum, eqs_edge_set, BrokenCircuitSet, WeightAssignment,
};
use crate::chromatic::{
    chromatic_polynomial_kfree, chromatic_polynomial_nbc, chromatic_polynomial_subset,
    chromatic_polynomial_weighted, count_colorings_containing, count_proper_colorings, csf_kfree,
    csf_nbc, csf_oracle_truncated, csf_subset, csf_weighted,
};
use crate::corpus;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::matroid::{graphical_matroid, subsets_of, Matroid};
use crate::symfunc::{IntPolynomial, Partition, PowerSumVector};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn render(&self) -> String {
        let mut out = format!("seed: {}\n", self.seed);
        for c in &self.checks {
            if c.passed() {
                out.push_str(&format!("PASS {} ({} instances)\n", c.name, c.instances));
            } else {
                out.push_str(&format!(
                    "FAIL {} ({} of {} instances failed): {}\n",
                    c.name,
                    c.failures,
                    c.instances,
                    c.witness.as_deref().unwrap_or("no witness")
                ));
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        out.push_str(&format!(
            "{} checks: {} passed, {} failed\n",
            self.checks.len(),
            passed,
            self.checks.len() - passed
        ));
        out
    }
}

struct Tally {
    name: &'static str,
    instances: usize,
    failures: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Tally {
        Tally {
            name,
            instances: 0,
            failures: 0,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            instances: self.instances,
            failures: self.failures,
            witness: self.witness,
        }
    }
}

/// Runs the full catalog on the built-in corpus.
pub fn run_builtin(seed: u64) -> Result<RunReport> {
    let corpus = corpus::builtin(seed);
    let mut checks = Vec::new();
    checks.extend(run_graph_group(&corpus.graphs, seed)?);
    checks.push(check_triangle_values(seed)?);
    checks.extend(run_digraph_group(&corpus.digraphs)?);
    checks.extend(run_matroid_group(&corpus.matroids, seed)?);
    checks.push(check_graphical_bridge(&corpus.graphs)?);
    Ok(RunReport { seed, checks })
}

/// Runs the graph-applicable checks on a single graph.
pub fn run_graph(name: &str, g: &Graph, seed: u64) -> Result<RunReport> {
    let graphs = vec![(name.to_string(), g.clone())];
    let mut checks = run_graph_group(&graphs, seed)?;
    if g.edge_count() <= crate::matroid::MAX_GROUND {
        checks.push(check_graphical_bridge(&graphs)?);
    }
    Ok(RunReport { seed, checks })
}

/// Runs the digraph checks on a single digraph.
pub fn run_digraph(name: &str, d: &Digraph, seed: u64) -> Result<RunReport> {
    let digraphs = vec![(name.to_string(), d.clone())];
    Ok(RunReport {
        seed,
        checks: run_digraph_group(&digraphs)?,
    })
}

/// Runs the matroid checks on a construction attempt. An axiom violation is
/// reported as a failed check rather than an error, so corrupted input
/// yields a failing report instead of aborting.
pub fn run_matroid(name: &str, construction: Result<Matroid>, seed: u64) -> Result<RunReport> {
    let m = match construction {
        Ok(m) => m,
        Err(Error::MatroidAxiom { axiom, witness }) => {
            let check = CheckResult {
                name: "matroid-axioms",
                instances: 1,
                failures: 1,
                witness: Some(format!("{name}: axiom {axiom} violated: {witness}")),
            };
            return Ok(RunReport {
                seed,
                checks: vec![check],
            });
        }
        Err(e) => return Err(e),
    };
    let matroids = vec![(name.to_string(), m)];
    Ok(RunReport {
        seed,
        checks: run_matroid_group(&matroids, seed)?,
    })
}

fn run_graph_group(graphs: &[(String, Graph)], seed: u64) -> Result<Vec<CheckResult>> {
    Ok(vec![
        check_coloring_oracle(graphs)?,
        check_chrompoly_four_way(graphs, seed)?,
        check_csf_four_way(graphs, seed)?,
        check_csf_expansion_oracle(graphs)?,
        check_csf_specialization(graphs)?,
        check_proper_iff_no_monochromatic(graphs)?,
        check_circuit_edge_forced(graphs)?,
        check_coloring_count_power(graphs)?,
        check_cancellation_sum(graphs, seed)?,
        check_broken_circuits_nonempty(graphs, seed)?,
        check_forest_component_count(graphs)?,
        check_gluing_monomial_sum(graphs)?,
    ])
}

fn run_digraph_group(digraphs: &[(String, Digraph)]) -> Result<Vec<CheckResult>> {
    Ok(vec![
        check_digraph_chromatic_sum(digraphs)?,
        check_digraph_kset_bridge(digraphs)?,
    ])
}

fn run_matroid_group(matroids: &[(String, Matroid)], seed: u64) -> Result<Vec<CheckResult>> {
    Ok(vec![
        check_matroid_axioms(matroids)?,
        check_rank_of_independents(matroids)?,
        check_dependent_contains_circuit(matroids)?,
        check_independent_extension(matroids)?,
        check_closure_properties(matroids)?,
        check_flat_criterion_equivalence(matroids)?,
        check_flat_intersections(matroids)?,
        check_moebius_double_sums(matroids)?,
        check_moebius_inversion(matroids, seed)?,
        check_flat_cancellation(matroids, seed)?,
        check_charpol_agreement(matroids, seed)?,
    ])
}

/// Colorings `V -> {1..q}` for all `q` up to the vertex count, counted by
/// brute force, must match the evaluated subset-expansion polynomial.
fn check_coloring_oracle(graphs: &[(String, Graph)]) -> Result<CheckResult> {
    let mut t = Tally::new("coloring-oracle");
    for (name, g) in graphs {
        let chi = chromatic_polynomial_subset(g)?;
        for q in 0..=g.vertex_count() as u64 {
            let counted = BigInt::from(count_proper_colorings(g, q)?);
            let evaluated = chi.eval_u64(q);
            t.record(counted == evaluated, || {
                format!("{name}, q={q}: polynomial gives {evaluated}, count gives {counted}")
            });
        }
    }
    Ok(t.finish())
}

fn labelings_for(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<crate::broken_circuits::Labeling> {
    vec![
        corpus::random_labeling(g, rng),
        corpus::random_labeling(g, rng),
        corpus::injective_labeling(g, rng),
    ]
}

/// The four polynomial expansions agree for every labeling, every subset of
/// the broken circuits, and every weight assignment tried.
fn check_chrompoly_four_way(graphs: &[(String, Graph)], seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new("chrompoly-four-way");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g) in graphs {
        let subset = chromatic_polynomial_subset(g)?;
        for (li, labeling) in labelings_for(g, &mut rng).iter().enumerate() {
            let all_bc = broken_circuits(g, labeling)?;
            let chosen =
                BrokenCircuitSet::from_edge_sets(corpus::random_subset(all_bc.members(), &mut rng));
            let mut ok = true;
            let mut detail = String::new();

            let nbc = chromatic_polynomial_nbc(g, labeling)?;
            if nbc != subset {
                ok = false;
                detail = format!("nbc gave {nbc}, subset gave {subset}");
            }
            let kfree = chromatic_polynomial_kfree(g, labeling, &chosen)?;
            if ok && kfree != subset {
                ok = false;
                detail = format!("kfree gave {kfree}, subset gave {subset}");
            }
            for weights in corpus::weight_batches(chosen.len(), &mut rng) {
                let a = WeightAssignment::new(&chosen, weights.clone())?;
                let weighted = chromatic_polynomial_weighted(g, labeling, &chosen, &a)?;
                if ok && weighted != subset {
                    ok = false;
                    detail = format!("weights {weights:?} gave {weighted}, subset gave {subset}");
                }
            }
            t.record(ok, || format!("{name}, labeling {li}: {detail}"));
        }
    }
    Ok(t.finish())
}

/// Same agreement in the power-sum basis.
fn check_csf_four_way(graphs: &[(String, Graph)], seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new("csf-four-way");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g) in graphs {
        let subset = csf_subset(g)?;
        for (li, labeling) in labelings_for(g, &mut rng).iter().enumerate() {
            let all_bc = broken_circuits(g, labeling)?;
            let chosen =
                BrokenCircuitSet::from_edge_sets(corpus::random_subset(all_bc.members(), &mut rng));
            let mut ok = true;
            let mut detail = String::new();

            if csf_nbc(g, labeling)? != subset {
                ok = false;
                detail = "nbc route disagrees".into();
            }
            if ok && csf_kfree(g, labeling, &chosen)? != subset {
                ok = false;
                detail = "kfree route disagrees".into();
            }
            for weights in corpus::weight_batches(chosen.len(), &mut rng) {
                let a = WeightAssignment::new(&chosen, weights.clone())?;
                if ok && csf_weighted(g, labeling, &chosen, &a)? != subset {
                    ok = false;
                    detail = format!("weighted route disagrees for weights {weights:?}");
                }
            }
            t.record(ok, || format!("{name}, labeling {li}: {detail}"));
        }
    }
    Ok(t.finish())
}

/// Expanding the power-sum expression in three variables reproduces the
/// definitional sum over proper 3-colorings, monomial by monomial.
fn check_csf_expansion_oracle(graphs: &[(String, Graph)]) -> Result<CheckResult> {
    let mut t = Tally::new("csf-expansion-oracle");
    for (name, g) in graphs {
        if g.vertex_count() > 4 {
            continue;
        }
        let expanded = csf_subset(g)?.expand_truncated(3)?;
        let oracle = csf_oracle_truncated(g, 3)?;
        t.record(expanded == oracle, || {
            format!("{name}: expansion and proper-coloring oracle differ")
        });
    }
    Ok(t.finish())
}

/// Specializing the power-sum expression to `q` ones counts proper
/// q-colorings.
fn check_csf_specialization(graphs: &[(String, Graph)]) -> Result<CheckResult> {
    let mut t = Tally::new("csf-specialization");
    for (name, g) in graphs {
        let x = csf_subset(g)?;
        for q in 0..=4u64 {
            let specialized = x.specialize(q);
            let counted = BigInt::from(count_proper_colorings(g, q)?);
            t.record(specialized == counted, || {
                format!("{name}, q={q}: specialization {specialized} vs count {counted}")
            });
        }
    }
    Ok(t.finish())
}

/// Frozen ground truth for the triangle, reproduced by every route.
fn check_triangle_values(seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new("triangle-values");
    let g = Graph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])?;
    let expected_chi = IntPolynomial::from_coeffs(vec![0, 2, -3, 1]);
    let mut expected_csf = PowerSumVector::zero();
    expected_csf.add_term(Partition::new(vec![1, 1, 1]), BigInt::from(1));
    expected_csf.add_term(Partition::new(vec![2, 1]), BigInt::from(-3));
    expected_csf.add_term(Partition::new(vec![3]), BigInt::from(2));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    t.record(chromatic_polynomial_subset(&g)? == expected_chi, || {
        "subset polynomial".into()
    });
    t.record(csf_subset(&g)? == expected_csf, || "subset csf".into());
    for labeling in labelings_for(&g, &mut rng) {
        let all_bc = broken_circuits(&g, &labeling)?;
        let a = WeightAssignment::constant(&all_bc, 5);
        t.record(
            chromatic_polynomial_nbc(&g, &labeling)? == expected_chi,
            || "nbc polynomial".into(),
        );
        t.record(
            chromatic_polynomial_kfree(&g, &labeling, &all_bc)? == expected_chi,
            || "kfree polynomial".into(),
        );
        t.record(
            chromatic_polynomial_weighted(&g, &labeling, &all_bc, &a)? == expected_chi,
            || "weighted polynomial".into(),
        );
        t.record(csf_nbc(&g, &labeling)? == expected_csf, || "nbc csf".into());
        t.record(csf_kfree(&g, &labeling, &all_bc)? == expected_csf, || {
            "kfree csf".into()
        });
        t.record(
            csf_weighted(&g, &labeling, &all_bc, &a)? == expected_csf,
            || "weighted csf".into(),
        );
    }
    Ok(t.finish())
}

/// A coloring is proper exactly when it leaves no monochromatic edge.
fn check_proper_iff_no_monochromatic(graphs: &[(String, Graph)]) -> Result<CheckResult> {
    let mut t = Tally::new("proper-iff-no-monochromatic-edge");
    for (name, g) in graphs {
        for_each_coloring_of(g, 3, |coloring| {
            let proper = g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v]);
            let eqs = eqs_edge_set(g, coloring);
            t.record(proper == eqs.is_empty(), || {
                format!("{name}, coloring {coloring:?}")
            });
        });
    }
    Ok(t.finish())
}

/// If all edges of a circuit except one are monochromatic, so is the last.
fn check_circuit_edge_forced(graphs: &[(String, Graph)]) -> Result<CheckResult> {
    let mut t = Tally::new("circuit-edge-forced");
    for (name, g) in graphs {
        let circuits = g.enumerate_circuits()?;
        if circuits.is_empty() {
            continue;
        }
        for_each_coloring_of(g, 4, |coloring| {
            let eqs = eqs_edge_set(g, coloring);
            for &c in &circuits {
                for e in c.indices() {
                    if c.remove(e).is_subset_of(eqs) {
                        t.record(eqs.contains(e), || {
                            format!(
                                "{name}, circuit {}, edge {e}, coloring {coloring:?}",
                                g.format_edge_set(c)
                            )
                        });
                    }
                }
            }
        });
    }
    Ok(t.finish())
}

/// The number of colorings gluing a fixed edge set is `q^conn`.
fn check_coloring_count_power(graphs: &[(String, Graph)]) -> Result<CheckResult> {
    let mut t = Tally::new("coloring-count-power");
    for (name, g) in graphs {
        for b in EdgeSet::all_subsets(g.edge_count()) {
            for q in 0..=3u64 {
                let counted = count_colorings_containing(g, b, q)?;
                let expected = (q as u128).pow(g.conn_under(b) as u32) as u64;
                t.record(counted == expected, || {
                    format!(
                        "{name}, b={}, q={q}: counted {counted}, expected {expected}",
                        g.format_edge_set(b)
                    )
                });
            }
        }
    }
    Ok(t.finish())
}

/// The alternating weighted sum over subsets of the monochromatic edges is
/// the properness indicator.
fn check_cancellation_sum(graphs: &[(String, Graph)], seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new("cancellation-sum");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g) in graphs {
        let labeling = corpus::random_labeling(g, &mut rng);
        let all_bc = broken_circuits(g, &labeling)?;
        let chosen =
            BrokenCircuitSet::from_edge_sets(corpus::random_subset(all_bc.members(), &mut rng));
        let batches = corpus::weight_batches(chosen.len(), &mut rng);
        let mut failure: Option<String> = None;
        for_each_coloring_of(g, 3, |coloring| {
            let expected = if eqs_edge_set(g, coloring).is_empty() {
                BigInt::from(1)
            } else {
                BigInt::zero()
            };
            for weights in &batches {
                if failure.is_some() {
                    return;
                }
                let a = WeightAssignment::new(&chosen, weights.clone())
                    .expect("weights match the chosen set");
                let sum = cancellation_sum(g, &chosen, &a, coloring)
                    .expect("corpus graphs fit the capacity guard");
                if sum != expected {
                    failure = Some(format!(
                        "{name}, coloring {coloring:?}, weights {weights:?}: got {sum}, expected {expected}"
                    ));
                }
            }
        });
        t.record(failure.is_none(), || failure.clone().unwrap());
    }
    Ok(t.finish())
}

/// No labeling ever produces an empty broken circuit of a graph.
fn check_broken_circuits_nonempty(graphs: &[(String, Graph)], seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new("broken-circuits-nonempty");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g) in graphs {
        for labeling in labelings_for(g, &mut rng) {
            let bc = broken_circuits(g, &labeling)?;
            t.record(bc.members().iter().all(|k| !k.is_empty()), || {
                format!("{name}: empty broken circuit")
            });
        }
    }
    Ok(t.finish())
}

/// Circuit-free spanning subgraphs satisfy `conn = |V| - |F|`.
fn check_forest_component_count(graphs: &[(String, Graph)]) -> Result<CheckResult> {
    let mut t = Tally::new("forest-component-count");
    for (name, g) in graphs {
        for f in EdgeSet::all_subsets(g.edge_count()) {
            if g.is_circuit_free(f) {
                t.record(g.conn_under(f) == g.vertex_count() - f.len(), || {
                    format!("{name}, forest {}", g.format_edge_set(f))
                });
            }
        }
    }
    Ok(t.finish())
}

/// Summing the coloring monomials over all colorings gluing a fixed edge
/// set gives the power-sum element of the component partition.
fn check_gluing_monomial_sum(graphs: &[(String, Graph)]) -> Result<CheckResult> {
    let mut t = Tally::new("gluing-monomial-sum");
    const VARS: usize = 3;
    for (name, g) in graphs {
        if g.vertex_count() > 4 {
            continue;
        }
        for b in EdgeSet::all_subsets(g.edge_count()) {
            let b_edges: Vec<(usize, usize)> = b.indices().map(|i| g.edges()[i]).collect();
            let mut summed = crate::symfunc::TruncatedPoly::zero(VARS);
            for_each_coloring_of(g, VARS as u64, |coloring| {
                if b_edges.iter().all(|&(u, v)| coloring[u] == coloring[v]) {
                    let mut exps = vec![0u32; VARS];
                    for &c in coloring {
                        exps[(c - 1) as usize] += 1;
                    }
                    summed.add_term(exps, BigInt::from(1));
                }
            });
            let expected = PowerSumVector::from_partition(g.lambda_under(b))
                .expand_truncated(VARS)
                .expect("corpus graphs fit the expansion guard");
            t.record(summed == expected, || {
                format!(
                    "{name}, b={}: monomial sum disagrees with the power-sum element",
                    g.format_edge_set(b)
                )
            });
        }
    }
    Ok(t.finish())
}

/// The 2-path-free arc expansion equals the chromatic polynomial of the
/// underlying graph.
fn check_digraph_chromatic_sum(digraphs: &[(String, Digraph)]) -> Result<CheckResult> {
    let mut t = Tally::new("digraph-chromatic-sum");
    for (name, d) in digraphs {
        let direct = d.chromatic_sum()?;
        let via_graph = chromatic_polynomial_subset(&d.underlying_graph())?;
        t.record(direct == via_graph, || {
            format!("{name}: arc expansion {direct}, graph expansion {via_graph}")
        });
    }
    Ok(t.finish())
}

/// The head-to-tail arc pairs are genuine broken circuits under the
/// interval labeling, arcs biject with edges, and 2-path-freeness of an arc
/// subset is exactly freeness from those pairs.
fn check_digraph_kset_bridge(digraphs: &[(String, Digraph)]) -> Result<CheckResult> {
    let mut t = Tally::new("digraph-kset-bridge");
    for (name, d) in digraphs {
        let g = d.underlying_graph();
        t.record(g.edge_count() == d.arc_count(), || {
            format!(
                "{name}: {} arcs but {} edges",
                d.arc_count(),
                g.edge_count()
            )
        });
        let labeling = d.interval_labeling()?;
        let genuine = broken_circuits(&g, &labeling)?;
        let kset = d.two_path_kset()?;
        for &k in kset.members() {
            t.record(genuine.contains(k), || {
                format!(
                    "{name}: {} is not a broken circuit under the interval labeling",
                    g.format_edge_set(k)
                )
            });
        }
        let edge_of_arc: Vec<usize> = d
            .arcs()
            .iter()
            .map(|&(s, t)| g.edge_index(s, t).expect("arc maps to an edge"))
            .collect();
        for bits in 0..(1u64 << d.arc_count()) {
            let f = crate::digraph::ArcSet(bits);
            let mut edges = EdgeSet::EMPTY;
            for i in f.indices() {
                edges.insert(edge_of_arc[i]);
            }
            t.record(
                d.is_two_path_free(f) == crate::broken_circuits::is_kfree(edges, &kset),
                || {
                    format!(
                        "{name}: 2-path-freeness and pair-freeness disagree on {}",
                        g.format_edge_set(edges)
                    )
                },
            );
        }
    }
    Ok(t.finish())
}

/// Reruns the axiom validator on each matroid's independence family.
fn check_matroid_axioms(matroids: &[(String, Matroid)]) -> Result<CheckResult> {
    let mut t = Tally::new("matroid-axioms");
    for (name, m) in matroids {
        let masks: Vec<u64> = (0..=m.full_set())
            .filter(|&s| m.is_independent(s))
            .collect();
        let rebuilt = Matroid::new(m.ground().to_vec(), &masks);
        t.record(rebuilt.is_ok(), || {
            format!("{name}: {}", rebuilt.unwrap_err())
        });
    }
    Ok(t.finish())
}

/// Independent sets have rank equal to their size.
fn check_rank_of_independents(matroids: &[(String, Matroid)]) -> Result<CheckResult> {
    let mut t = Tally::new("rank-of-independents");
    for (name, m) in matroids {
        for s in 0..=m.full_set() {
            if m.is_independent(s) {
                t.record(m.rank(s) == s.count_ones() as usize, || {
                    format!("{name}, set {}", m.format_subset(s))
                });
            }
        }
    }
    Ok(t.finish())
}

/// Every dependent set contains a circuit.
fn check_dependent_contains_circuit(matroids: &[(String, Matroid)]) -> Result<CheckResult> {
    let mut t = Tally::new("dependent-contains-circuit");
    for (name, m) in matroids {
        let circuits = m.circuits();
        for s in 0..=m.full_set() {
            if !m.is_independent(s) {
                t.record(circuits.iter().any(|&c| c & !s == 0), || {
                    format!("{name}, dependent set {}", m.format_subset(s))
                });
            }
        }
    }
    Ok(t.finish())
}

/// Every independent subset of `T` extends to an independent subset of `T`
/// of size `rank(T)`.
fn check_independent_extension(matroids: &[(String, Matroid)]) -> Result<CheckResult> {
    let mut t = Tally::new("independent-extension");
    for (name, m) in matroids {
        for target in 0..=m.full_set() {
            let r = m.rank(target);
            for s in subsets_of(target) {
                if !m.is_independent(s) {
                    continue;
                }
                // greedy completion inside the target
                let mut cur = s;
                let mut grew = true;
                while grew && (cur.count_ones() as usize) < r {
                    grew = false;
                    let mut rest = target & !cur;
                    while rest != 0 {
                        let e = rest & rest.wrapping_neg();
                        rest ^= e;
                        if m.is_independent(cur | e) {
                            cur |= e;
                            grew = true;
                            break;
                        }
                    }
                }
                t.record(cur.count_ones() as usize == r, || {
                    format!(
                        "{name}: {} does not extend to rank {r} inside {}",
                        m.format_subset(s),
                        m.format_subset(target)
                    )
                });
            }
        }
    }
    Ok(t.finish())
}

/// Closure is extensive, idempotent on flats, monotone, empty on loopless
/// matroids, and rank-preserving.
fn check_closure_properties(matroids: &[(String, Matroid)]) -> Result<CheckResult> {
    let mut t = Tally::new("closure-properties");
    for (name, m) in matroids {
        let full = m.full_set();
        let closures: Vec<u64> = (0..=full).map(|s| m.closure(s)).collect();
        for s in 0..=full {
            let c = closures[s as usize];
            t.record(s & !c == 0 && m.is_flat(c), || {
                format!(
                    "{name}: closure of {} is not an enclosing flat",
                    m.format_subset(s)
                )
            });
            t.record(m.rank(s) == m.rank(c), || {
                format!("{name}: closure changes the rank of {}", m.format_subset(s))
            });
            if m.is_flat(s) {
                t.record(c == s, || {
                    format!("{name}: flat {} moves under closure", m.format_subset(s))
                });
            }
            // removing one element at a time is enough for monotonicity
            let mut rest = s;
            while rest != 0 {
                let e = rest & rest.wrapping_neg();
                rest ^= e;
                let smaller = closures[(s & !e) as usize];
                t.record(smaller & !c == 0, || {
                    format!(
                        "{name}: closure not monotone at {} minus {}",
                        m.format_subset(s),
                        m.format_subset(e)
                    )
                });
            }
        }
        if m.loops() == 0 {
            t.record(closures[0] == 0, || {
                format!(
                    "{name}: loopless but the empty set closes to {}",
                    m.format_subset(closures[0])
                )
            });
        }
    }
    Ok(t.finish())
}

/// The circuit-completion criterion and the rank-maximality definition pick
/// out the same flats.
fn check_flat_criterion_equivalence(matroids: &[(String, Matroid)]) -> Result<CheckResult> {
    let mut t = Tally::new("flat-criterion-equivalence");
    for (name, m) in matroids {
        for s in 0..=m.full_set() {
            t.record(m.is_flat(s) == m.is_flat_by_maximality(s), || {
                format!("{name}, set {}", m.format_subset(s))
            });
        }
    }
    Ok(t.finish())
}

/// Pairwise intersections of flats are flats, and the lattice has the
/// expected bottom and top.
fn check_flat_intersections(matroids: &[(String, Matroid)]) -> Result<CheckResult> {
    let mut t = Tally::new("flat-intersections");
    for (name, m) in matroids {
        let lattice = m.flats();
        let flats = lattice.flats();
        t.record(lattice.bottom() == m.closure(0), || {
            format!("{name}: bottom is not the closure of the empty set")
        });
        t.record(lattice.top() == m.full_set(), || {
            format!("{name}: top is not the ground set")
        });
        for (i, &a) in flats.iter().enumerate() {
            for &b in &flats[i..] {
                t.record(m.is_flat(a & b), || {
                    format!(
                        "{name}: {} and {} intersect outside the lattice",
                        m.format_subset(a),
                        m.format_subset(b)
                    )
                });
            }
        }
    }
    Ok(t.finish())
}

/// Both Moebius double-sum identities on every nested flat pair.
fn check_moebius_double_sums(matroids: &[(String, Matroid)]) -> Result<CheckResult> {
    let mut t = Tally::new("moebius-double-sums");
    for (name, m) in matroids {
        let lattice = m.flats();
        let flats = lattice.flats();
        let table = lattice.moebius_table();
        for i in 0..flats.len() {
            for j in i..flats.len() {
                if flats[i] & !flats[j] != 0 {
                    continue;
                }
                let expected = i64::from(i == j);
                let mut down = 0i64;
                let mut up = 0i64;
                for h in i..=j {
                    if flats[i] & !flats[h] == 0 && flats[h] & !flats[j] == 0 {
                        down += table.mu(i, h).expect("nested pair");
                        up += table.mu(h, j).expect("nested pair");
                    }
                }
                t.record(down == expected && up == expected, || {
                    format!(
                        "{name}: interval [{}, {}] sums to {down}/{up}",
                        m.format_subset(flats[i]),
                        m.format_subset(flats[j])
                    )
                });
            }
        }
    }
    Ok(t.finish())
}

/// Moebius inversion round-trips random integer families on the lattice.
fn check_moebius_inversion(matroids: &[(String, Matroid)], seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new("moebius-inversion");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, m) in matroids {
        let lattice = m.flats();
        let flats = lattice.flats();
        let table = lattice.moebius_table();
        for round in 0..5 {
            let beta: Vec<i64> = (0..flats.len())
                .map(|_| rand::Rng::gen_range(&mut rng, -20..=20))
                .collect();
            // partial sums over down-sets
            let sums: Vec<i128> = (0..flats.len())
                .map(|y| {
                    (0..=y)
                        .filter(|&x| flats[x] & !flats[y] == 0)
                        .map(|x| i128::from(beta[x]))
                        .sum()
                })
                .collect();
            for z in 0..flats.len() {
                let recovered: i128 = (0..=z)
                    .filter(|&y| flats[y] & !flats[z] == 0)
                    .map(|y| i128::from(table.mu(y, z).expect("nested pair")) * sums[y])
                    .sum();
                t.record(recovered == i128::from(beta[z]), || {
                    format!(
                        "{name}, round {round}: inversion at {} gives {recovered}, expected {}",
                        m.format_subset(flats[z]),
                        beta[z]
                    )
                });
            }
        }
    }
    Ok(t.finish())
}

/// The alternating weighted sum over the subsets of any flat vanishes
/// unless the flat is empty.
fn check_flat_cancellation(matroids: &[(String, Matroid)], seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new("flat-cancellation");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, m) in matroids {
        let labels = corpus::random_ground_labels(m.size(), &mut rng);
        let all_bc = m.broken_circuits(&labels)?;
        let kset = corpus::random_subset(&all_bc, &mut rng);
        let batches = corpus::weight_batches(kset.len(), &mut rng);
        for &flat in m.flats().flats() {
            for weights in &batches {
                let mut sum = BigInt::zero();
                for b in subsets_of(flat) {
                    let mut prod = BigInt::from(1);
                    for (&k, &w) in kset.iter().zip(weights) {
                        if k & !b == 0 {
                            prod *= w;
                        }
                    }
                    if b.count_ones() % 2 == 0 {
                        sum += prod;
                    } else {
                        sum -= prod;
                    }
                }
                let expected = BigInt::from(u8::from(flat == 0));
                t.record(sum == expected, || {
                    format!(
                        "{name}, flat {}, weights {weights:?}: got {sum}",
                        m.format_subset(flat)
                    )
                });
            }
        }
    }
    Ok(t.finish())
}

/// All five characteristic-polynomial routes agree with the Moebius
/// definition.
fn check_charpol_agreement(matroids: &[(String, Matroid)], seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new("matroid-charpol-agreement");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, m) in matroids {
        let (_, tilde) = m.characteristic_polynomial();
        t.record(m.charpol_subset() == tilde, || {
            format!("{name}: subset expansion disagrees with the Moebius definition")
        });
        let labelings = vec![
            corpus::random_ground_labels(m.size(), &mut rng),
            corpus::injective_ground_labels(m.size(), &mut rng),
        ];
        for labels in &labelings {
            let all_bc = m.broken_circuits(labels)?;
            let kset = corpus::random_subset(&all_bc, &mut rng);
            t.record(m.charpol_kfree(labels, &kset)? == tilde, || {
                format!("{name}: kfree expansion disagrees")
            });
            t.record(m.charpol_nbc(labels)? == tilde, || {
                format!("{name}: nbc expansion disagrees")
            });
            for weights in corpus::weight_batches(kset.len(), &mut rng) {
                t.record(
                    m.charpol_weighted(labels, &kset, &weights)? == tilde,
                    || format!("{name}: weighted expansion disagrees for {weights:?}"),
                );
            }
        }
        let injective = &labelings[1];
        t.record(m.charpol_whitney(injective)? == tilde, || {
            format!("{name}: rank-form expansion disagrees")
        });
    }
    Ok(t.finish())
}

/// The graphical matroid is loopless, inherits the graph's circuits, has
/// rank `|V| - conn` on every edge subset, and its characteristic
/// polynomial shifted by the component count is the chromatic polynomial.
fn check_graphical_bridge(graphs: &[(String, Graph)]) -> Result<CheckResult> {
    let mut t = Tally::new("graphical-bridge");
    for (name, g) in graphs {
        let m = graphical_matroid(g)?;
        t.record(m.loops() == 0, || format!("{name}: graphical matroid has loops"));
        let graph_circuits: Vec<u64> = g
            .enumerate_circuits()?
            .iter()
            .map(|c| c.bits())
            .collect();
        t.record(m.circuits() == graph_circuits, || {
            format!("{name}: matroid circuits differ from graph circuits")
        });
        for s in 0..=m.full_set() {
            t.record(
                m.rank(s) == g.vertex_count() - g.conn_under(EdgeSet(s)),
                || format!("{name}: rank mismatch on {}", m.format_subset(s)),
            );
        }
        let (chi_m, _) = m.characteristic_polynomial();
        let lifted = chi_m.shift(g.conn());
        let chi_g = chromatic_polynomial_subset(g)?;
        t.record(lifted == chi_g, || {
            format!("{name}: x^conn * matroid polynomial is {lifted}, graph polynomial is {chi_g}")
        });
    }
    Ok(t.finish())
}

/// Enumerates colorings `V -> {1..q}` of a graph.
fn for_each_coloring_of(g: &Graph, q: u64, mut f: impl FnMut(&[u32])) {
    let n = g.vertex_count();
    if n == 0 {
        f(&[]);
        return;
    }
    if q == 0 {
        return;
    }
    let mut coloring = vec![1u32; n];
    loop {
        f(&coloring);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if u64::from(coloring[i]) < q {
                coloring[i] += 1;
                break;
            }
            coloring[i] = 1;
        }
    }
}
