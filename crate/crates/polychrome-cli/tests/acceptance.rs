//! Acceptance suite: every criterion is checked with exact integer
//! arithmetic (tolerance zero) and prints one pass line when it holds.
//! Criterion 10 drives the compiled binary and compares output bytes.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polychrome::broken_circuits::{
    broken_circuits, cancellation_sum, eqs_edge_set, BrokenCircuitSet, WeightAssignment,
};
use polychrome::chromatic::{
    chromatic_polynomial_kfree, chromatic_polynomial_nbc, chromatic_polynomial_subset,
    chromatic_polynomial_weighted, count_colorings_containing, count_proper_colorings, csf_kfree,
    csf_nbc, csf_oracle_truncated, csf_subset, csf_weighted,
};
use polychrome::corpus;
use polychrome::graph::{EdgeSet, Graph};
use polychrome::matroid::subsets_of;
use polychrome::symfunc::{IntPolynomial, Partition, PowerSumVector};

const SEED: u64 = 42;

fn for_each_coloring(n: usize, q: u64, mut f: impl FnMut(&[u32])) {
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

/// All 64 labeled graphs on the fixed 4-element vertex set.
fn k4_subset_graphs() -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
        .collect();
    (0u32..64)
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_indices(4, &edges).unwrap()
        })
        .collect()
}

#[test]
fn criterion_01_coloring_oracle() {
    let mut instances = 0;
    for g in k4_subset_graphs() {
        let chi = chromatic_polynomial_subset(&g).unwrap();
        for q in 0..=4u64 {
            assert_eq!(
                chi.eval_u64(q),
                BigInt::from(count_proper_colorings(&g, q).unwrap()),
                "coloring count mismatch at q={q}"
            );
            instances += 1;
        }
    }
    assert_eq!(instances, 320);
    println!("[PASS] criterion 1: coloring oracle agreement ({instances} instances, exact)");
}

#[test]
fn criterion_02_four_formula_chromatic_equality() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut instances = 0;
    for (name, g) in corpus::corpus_graphs() {
        let subset = chromatic_polynomial_subset(&g).unwrap();
        let labelings = [
            corpus::random_labeling(&g, &mut rng),
            corpus::random_labeling(&g, &mut rng),
            corpus::injective_labeling(&g, &mut rng),
        ];
        for labeling in &labelings {
            let all_bc = broken_circuits(&g, labeling).unwrap();
            let chosen =
                BrokenCircuitSet::from_edge_sets(corpus::random_subset(all_bc.members(), &mut rng));
            assert_eq!(
                chromatic_polynomial_nbc(&g, labeling).unwrap(),
                subset,
                "{name}: nbc route"
            );
            assert_eq!(
                chromatic_polynomial_kfree(&g, labeling, &chosen).unwrap(),
                subset,
                "{name}: kfree route"
            );
            for weights in corpus::weight_batches(chosen.len(), &mut rng) {
                let a = WeightAssignment::new(&chosen, weights).unwrap();
                assert_eq!(
                    chromatic_polynomial_weighted(&g, labeling, &chosen, &a).unwrap(),
                    subset,
                    "{name}: weighted route"
                );
            }
            instances += 1;
        }
    }
    println!(
        "[PASS] criterion 2: subset = kfree = nbc = weighted chromatic polynomial \
         ({instances} graph-labeling instances, 12 weight assignments each, exact)"
    );
}

#[test]
fn criterion_03_csf_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let graphs = corpus::corpus_graphs();
    let mut four_way = 0;
    for (name, g) in &graphs {
        let subset = csf_subset(g).unwrap();
        let labeling = corpus::injective_labeling(g, &mut rng);
        let all_bc = broken_circuits(g, &labeling).unwrap();
        let chosen =
            BrokenCircuitSet::from_edge_sets(corpus::random_subset(all_bc.members(), &mut rng));
        assert_eq!(csf_nbc(g, &labeling).unwrap(), subset, "{name}: nbc");
        assert_eq!(
            csf_kfree(g, &labeling, &chosen).unwrap(),
            subset,
            "{name}: kfree"
        );
        for weights in corpus::weight_batches(chosen.len(), &mut rng) {
            let a = WeightAssignment::new(&chosen, weights).unwrap();
            assert_eq!(
                csf_weighted(g, &labeling, &chosen, &a).unwrap(),
                subset,
                "{name}: weighted"
            );
        }
        four_way += 1;
    }

    let mut truncations = 0;
    for (name, g) in &graphs {
        if g.vertex_count() <= 4 {
            assert_eq!(
                csf_subset(g).unwrap().expand_truncated(3).unwrap(),
                csf_oracle_truncated(g, 3).unwrap(),
                "{name}: truncation oracle"
            );
            truncations += 1;
        }
    }

    let mut specializations = 0;
    for (name, g) in &graphs {
        let x = csf_subset(g).unwrap();
        for q in 0..=4u64 {
            assert_eq!(
                x.specialize(q),
                BigInt::from(count_proper_colorings(g, q).unwrap()),
                "{name}: specialization at q={q}"
            );
            specializations += 1;
        }
    }
    println!(
        "[PASS] criterion 3: csf four-way equality ({four_way} graphs), truncation oracle \
         ({truncations} graphs), specialization ({specializations} instances), exact"
    );
}

#[test]
fn criterion_04_triangle_ground_truth() {
    let g = Graph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
    let expected_chi = IntPolynomial::from_coeffs(vec![0, 2, -3, 1]);
    let mut expected_csf = PowerSumVector::zero();
    expected_csf.add_term(Partition::new(vec![1, 1, 1]), BigInt::from(1));
    expected_csf.add_term(Partition::new(vec![2, 1]), BigInt::from(-3));
    expected_csf.add_term(Partition::new(vec![3]), BigInt::from(2));

    assert_eq!(chromatic_polynomial_subset(&g).unwrap(), expected_chi);
    assert_eq!(csf_subset(&g).unwrap(), expected_csf);

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for labeling in [
        corpus::random_labeling(&g, &mut rng),
        corpus::injective_labeling(&g, &mut rng),
    ] {
        let all_bc = broken_circuits(&g, &labeling).unwrap();
        assert_eq!(
            chromatic_polynomial_nbc(&g, &labeling).unwrap(),
            expected_chi
        );
        assert_eq!(
            chromatic_polynomial_kfree(&g, &labeling, &all_bc).unwrap(),
            expected_chi
        );
        assert_eq!(csf_nbc(&g, &labeling).unwrap(), expected_csf);
        assert_eq!(csf_kfree(&g, &labeling, &all_bc).unwrap(), expected_csf);
        for w in [-7, 0, 1, 9] {
            let a = WeightAssignment::constant(&all_bc, w);
            assert_eq!(
                chromatic_polynomial_weighted(&g, &labeling, &all_bc, &a).unwrap(),
                expected_chi
            );
            assert_eq!(
                csf_weighted(&g, &labeling, &all_bc, &a).unwrap(),
                expected_csf
            );
        }
    }
    println!(
        "[PASS] criterion 4: triangle ground truth chi = 2x - 3x^2 + x^3, \
         X = p111 - 3 p21 + 2 p3, every method, exact"
    );
}

#[test]
fn criterion_05_digraph_proposition() {
    let digraphs = corpus::corpus_digraphs(SEED);
    assert_eq!(digraphs.len(), 21);
    for (name, d) in &digraphs {
        assert!(d.is_transitive(), "{name}");
        assert_eq!(
            d.chromatic_sum().unwrap(),
            chromatic_polynomial_subset(&d.underlying_graph()).unwrap(),
            "{name}: 2-path-free expansion"
        );
    }
    println!(
        "[PASS] criterion 5: digraph 2-path-free sum equals the underlying chromatic \
         polynomial (21 digraphs, exact)"
    );
}

#[test]
fn criterion_06_matroid_formula_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let matroids = corpus::corpus_matroids();
    let loopy = matroids.iter().filter(|(_, m)| m.loops() != 0).count();
    assert!(loopy >= 2, "corpus must include loop-bearing matroids");
    for (name, m) in &matroids {
        let (_, tilde) = m.characteristic_polynomial();
        if m.loops() != 0 {
            assert!(tilde.is_zero(), "{name}: loops must zero the polynomial");
        }
        assert_eq!(m.charpol_subset(), tilde, "{name}: subset route");
        let labels = [
            corpus::random_ground_labels(m.size(), &mut rng),
            corpus::injective_ground_labels(m.size(), &mut rng),
        ];
        for l in &labels {
            let all_bc = m.broken_circuits(l).unwrap();
            let kset = corpus::random_subset(&all_bc, &mut rng);
            assert_eq!(m.charpol_nbc(l).unwrap(), tilde, "{name}: nbc route");
            assert_eq!(
                m.charpol_kfree(l, &kset).unwrap(),
                tilde,
                "{name}: kfree route"
            );
            for weights in corpus::weight_batches(kset.len(), &mut rng) {
                assert_eq!(
                    m.charpol_weighted(l, &kset, &weights).unwrap(),
                    tilde,
                    "{name}: weighted route"
                );
            }
        }
        assert_eq!(
            m.charpol_whitney(&labels[1]).unwrap(),
            tilde,
            "{name}: rank-form route"
        );
    }
    println!(
        "[PASS] criterion 6: all five characteristic-polynomial routes match the Moebius \
         definition ({} matroids, exact)",
        matroids.len()
    );
}

#[test]
fn criterion_07_graphical_bridge() {
    let graphs = corpus::corpus_graphs();
    for (name, g) in &graphs {
        let m = polychrome::matroid::graphical_matroid(g).unwrap();
        let (chi_m, _) = m.characteristic_polynomial();
        assert_eq!(
            chi_m.shift(g.conn()),
            chromatic_polynomial_subset(g).unwrap(),
            "{name}: graphical bridge"
        );
    }
    println!(
        "[PASS] criterion 7: x^conn * matroid polynomial = chromatic polynomial \
         ({} graphs, exact)",
        graphs.len()
    );
}

#[test]
fn criterion_08_moebius_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let matroids = corpus::corpus_matroids();
    for (name, m) in &matroids {
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
                        down += table.mu(i, h).unwrap();
                        up += table.mu(h, j).unwrap();
                    }
                }
                assert_eq!(down, expected, "{name}: downward double sum");
                assert_eq!(up, expected, "{name}: upward double sum");
            }
        }
        for _ in 0..5 {
            let beta: Vec<i64> = (0..flats.len())
                .map(|_| rand::Rng::gen_range(&mut rng, -20..=20))
                .collect();
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
                    .map(|y| i128::from(table.mu(y, z).unwrap()) * sums[y])
                    .sum();
                assert_eq!(recovered, i128::from(beta[z]), "{name}: inversion");
            }
        }
    }
    println!(
        "[PASS] criterion 8: Moebius double sums and inversion round-trips on every \
         corpus lattice ({} matroids, 5 random families each, exact)",
        matroids.len()
    );
}

#[test]
fn criterion_09_lemma_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let graphs = corpus::corpus_graphs();
    let matroids = corpus::corpus_matroids();

    // a coloring is proper exactly when no edge is monochromatic
    for (name, g) in &graphs {
        for_each_coloring(g.vertex_count(), 3, |coloring| {
            let proper = g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v]);
            assert_eq!(
                proper,
                eqs_edge_set(g, coloring).is_empty(),
                "{name}: properness test"
            );
        });
    }

    // a circuit with all but one edge monochromatic forces the last edge
    for (name, g) in &graphs {
        let circuits = g.enumerate_circuits().unwrap();
        if circuits.is_empty() {
            continue;
        }
        for_each_coloring(g.vertex_count(), 4, |coloring| {
            let eqs = eqs_edge_set(g, coloring);
            for &c in &circuits {
                for e in c.indices() {
                    if c.remove(e).is_subset_of(eqs) {
                        assert!(eqs.contains(e), "{name}: circuit closure under colorings");
                    }
                }
            }
        });
    }

    // gluing colorings along an edge set counts q^conn
    for (name, g) in &graphs {
        for b in EdgeSet::all_subsets(g.edge_count()) {
            for q in 0..=3u64 {
                assert_eq!(
                    count_colorings_containing(g, b, q).unwrap(),
                    (q as u128).pow(g.conn_under(b) as u32) as u64,
                    "{name}: gluing count"
                );
            }
        }
    }

    // the alternating weighted sum detects properness
    for (name, g) in &graphs {
        let labeling = corpus::random_labeling(g, &mut rng);
        let all_bc = broken_circuits(g, &labeling).unwrap();
        let chosen =
            BrokenCircuitSet::from_edge_sets(corpus::random_subset(all_bc.members(), &mut rng));
        let batches = corpus::weight_batches(chosen.len(), &mut rng);
        for_each_coloring(g.vertex_count(), 3, |coloring| {
            let expected = BigInt::from(u8::from(eqs_edge_set(g, coloring).is_empty()));
            for weights in &batches {
                let a = WeightAssignment::new(&chosen, weights.clone()).unwrap();
                assert_eq!(
                    cancellation_sum(g, &chosen, &a, coloring).unwrap(),
                    expected,
                    "{name}: cancellation"
                );
            }
        });

        // broken circuits are never empty
        for k in all_bc.members() {
            assert!(!k.is_empty(), "{name}: empty broken circuit");
        }
    }

    // circuit-free subsets satisfy conn = |V| - |F|
    for (name, g) in &graphs {
        for f in EdgeSet::all_subsets(g.edge_count()) {
            if g.is_circuit_free(f) {
                assert_eq!(
                    g.conn_under(f),
                    g.vertex_count() - f.len(),
                    "{name}: forest count"
                );
            }
        }
    }

    // matroid lemmas: rank of independents, circuits inside dependents,
    // extension of independents, closure properties
    for (name, m) in &matroids {
        let circuits = m.circuits();
        for s in 0..=m.full_set() {
            if m.is_independent(s) {
                assert_eq!(m.rank(s), s.count_ones() as usize, "{name}: rank");
            } else {
                assert!(
                    circuits.iter().any(|&c| c & !s == 0),
                    "{name}: dependent set without circuit"
                );
            }
        }
        for target in 0..=m.full_set() {
            let r = m.rank(target);
            for s in subsets_of(target) {
                if !m.is_independent(s) {
                    continue;
                }
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
                assert_eq!(cur.count_ones() as usize, r, "{name}: extension");
            }
        }
        for s in 0..=m.full_set() {
            let c = m.closure(s);
            assert_eq!(s & !c, 0, "{name}: closure is extensive");
            assert!(m.is_flat(c), "{name}: closure lands on a flat");
            assert_eq!(m.rank(s), m.rank(c), "{name}: closure preserves rank");
            if m.is_flat(s) {
                assert_eq!(c, s, "{name}: flats are closed");
            }
            let mut rest = s;
            while rest != 0 {
                let e = rest & rest.wrapping_neg();
                rest ^= e;
                assert_eq!(m.closure(s & !e) & !c, 0, "{name}: closure is monotone");
            }
        }
        if m.loops() == 0 {
            assert_eq!(m.closure(0), 0, "{name}: loopless empty closure");
        }
    }

    println!(
        "[PASS] criterion 9: lemma suite (properness, circuit closure, gluing counts, \
         cancellation, nonempty broken circuits, forest counts, rank/circuit/extension, \
         closure axioms) on {} graphs and {} matroids, exact",
        graphs.len(),
        matroids.len()
    );
}

mod cli {
    use std::path::{Path, PathBuf};
    use std::process::{Command, Output};

    fn bin() -> &'static str {
        env!("CARGO_BIN_EXE_polychrome")
    }

    fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
        let path = dir.join(name);
        std::fs::write(&path, content).unwrap();
        path
    }

    fn run(args: &[&str], dir: &Path) -> Output {
        Command::new(bin())
            .args(args)
            .current_dir(dir)
            .output()
            .expect("binary runs")
    }

    fn stdout(out: &Output) -> String {
        String::from_utf8(out.stdout.clone()).unwrap()
    }

    #[test]
    fn criterion_10_cli_golden() {
        let dir = tempfile::tempdir().unwrap();
        let dir = dir.path();
        write(
            dir,
            "triangle.graph",
            "vertices: 1 2 3\nedge: 1 2\nedge: 2 3\nedge: 1 3\n",
        );
        write(dir, "edgeless3.graph", "vertices: a b c\n");
        write(dir, "k2.graph", "vertices: a b\nedge: a b\n");
        write(dir, "edgeless2.graph", "vertices: a b\n");
        write(
            dir,
            "tri.labels",
            "label: 1 2 1\nlabel: 2 3 2\nlabel: 1 3 3\n",
        );
        write(dir, "u12.matroid", "uniform: 1 2\n");
        write(dir, "loop.matroid", "ground: e\n");
        write(dir, "graphic-tri.matroid", "graphic: triangle.graph\n");
        write(
            dir,
            "chain3.digraph",
            "vertices: 1 2 3\narc: 1 2\narc: 2 3\narc: 1 3\n",
        );
        write(
            dir,
            "nontrans.digraph",
            "vertices: 1 2 3\narc: 1 2\narc: 2 3\n",
        );
        write(dir, "corrupt.matroid", "ground: a b\nindependent: a b\n");
        let mut big = String::from("vertices:");
        for i in 1..=7 {
            big.push_str(&format!(" v{i}"));
        }
        big.push('\n');
        for i in 1..=7 {
            for j in (i + 1)..=7 {
                big.push_str(&format!("edge: v{i} v{j}\n"));
            }
        }
        write(dir, "big.graph", &big); // 21 edges

        // chromatic polynomial outputs, byte-exact
        let out = run(&["chrompoly", "triangle.graph"], dir);
        assert!(out.status.success());
        assert_eq!(stdout(&out), "0 2 -3 1\n2*x - 3*x^2 + x^3\n");

        let out = run(&["chrompoly", "edgeless3.graph"], dir);
        assert_eq!(stdout(&out), "0 0 0 1\nx^3\n");

        let out = run(
            &[
                "chrompoly",
                "triangle.graph",
                "--method",
                "nbc",
                "--labels",
                "tri.labels",
            ],
            dir,
        );
        assert_eq!(stdout(&out), "0 2 -3 1\n2*x - 3*x^2 + x^3\n");

        let out = run(&["chrompoly", "triangle.graph", "--q", "3"], dir);
        assert_eq!(stdout(&out), "0 2 -3 1\n2*x - 3*x^2 + x^3\nchi(3) = 6\n");

        // chromatic symmetric function outputs
        let out = run(&["csf", "k2.graph"], dir);
        assert_eq!(stdout(&out), "[1,1]: 1\n[2]: -1\n");
        let out = run(&["csf", "edgeless2.graph"], dir);
        assert_eq!(stdout(&out), "[1,1]: 1\n");
        let out = run(&["csf", "triangle.graph"], dir);
        assert_eq!(stdout(&out), "[1,1,1]: 1\n[2,1]: -3\n[3]: 2\n");

        // characteristic polynomials
        let out = run(&["charpoly", "u12.matroid"], dir);
        assert_eq!(
            stdout(&out),
            "chi: -1 1\nchi: -1 + x\nchitilde: -1 1\nchitilde: -1 + x\n"
        );
        let out = run(&["charpoly", "loop.matroid"], dir);
        assert_eq!(stdout(&out), "chi: 1\nchi: 1\nchitilde: 0\nchitilde: 0\n");
        let out = run(&["charpoly", "graphic-tri.matroid"], dir);
        assert_eq!(
            stdout(&out),
            "chi: 2 -3 1\nchi: 2 - 3*x + x^2\nchitilde: 2 -3 1\nchitilde: 2 - 3*x + x^2\n"
        );

        // digraph expansion
        let out = run(&["digraph", "chain3.digraph"], dir);
        assert_eq!(stdout(&out), "0 2 -3 1\n2*x - 3*x^2 + x^3\n");
        let out = run(&["digraph", "nontrans.digraph"], dir);
        assert_eq!(out.status.code(), Some(4));

        // exit-code contract
        let out = run(&["chrompoly", "missing.graph"], dir);
        assert_eq!(out.status.code(), Some(2));
        let out = run(&["verify", "big.graph"], dir);
        assert_eq!(out.status.code(), Some(3));
        let out = run(&["verify", "corrupt.matroid"], dir);
        assert_eq!(out.status.code(), Some(1));
        assert!(stdout(&out).contains("FAIL matroid-axioms"));

        // determinism: two builtin runs with the same seed are byte-identical
        let a = run(&["verify", "--builtin-corpus", "--seed", "7"], dir);
        let b = run(&["verify", "--builtin-corpus", "--seed", "7"], dir);
        assert!(a.status.success(), "builtin corpus must pass");
        assert_eq!(stdout(&a), stdout(&b));
        assert!(stdout(&a).ends_with("27 checks: 27 passed, 0 failed\n"));

        println!("[PASS] criterion 10: CLI golden outputs byte-exact, exit codes 0/1/2/3/4");
    }
}
