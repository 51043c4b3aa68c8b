//! The built-in verification corpus: every labeled graph on at most four
//! vertices plus K5 and C5, uniform matroids up to five elements, graphical
//! matroids of the graph corpus, two loop-bearing matroids, and seeded
//! random transitive digraphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::broken_circuits::Labeling;
use crate::digraph::Digraph;
use crate::graph::Graph;
use crate::matroid::{graphical_matroid, uniform_matroid, Matroid};

/// Number of random transitive digraphs in the corpus.
pub const RANDOM_DIGRAPHS: usize = 20;

pub struct Corpus {
    pub graphs: Vec<(String, Graph)>,
    pub matroids: Vec<(String, Matroid)>,
    pub digraphs: Vec<(String, Digraph)>,
}

/// Builds the whole corpus. The digraphs are generated from `seed`; graphs
/// and matroids are fixed.
pub fn builtin(seed: u64) -> Corpus {
    Corpus {
        graphs: corpus_graphs(),
        matroids: corpus_matroids(),
        digraphs: corpus_digraphs(seed),
    }
}

/// Every labeled graph on 0..=4 vertices (all edge subsets of the complete
/// graph), plus K5 and C5.
pub fn corpus_graphs() -> Vec<(String, Graph)> {
    let names = ["a", "b", "c", "d", "e"];
    let mut out = Vec::new();
    for n in 0..=4usize {
        let verts: Vec<&str> = names[..n].to_vec();
        let all_pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << all_pairs.len()) {
            let edges: Vec<(&str, &str)> = all_pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &(u, v))| (names[u], names[v]))
                .collect();
            let g = Graph::new(&verts, &edges).expect("corpus graphs are valid");
            out.push((format!("G{n}/{mask}"), g));
        }
    }
    let k5_edges: Vec<(&str, &str)> = (0..5)
        .flat_map(|u| (u + 1..5).map(move |v| (names[u], names[v])))
        .collect();
    out.push((
        "K5".into(),
        Graph::new(&names, &k5_edges).expect("K5 is valid"),
    ));
    let c5_edges: Vec<(&str, &str)> = (0..5).map(|i| (names[i], names[(i + 1) % 5])).collect();
    out.push((
        "C5".into(),
        Graph::new(&names, &c5_edges).expect("C5 is valid"),
    ));
    out
}

/// Uniform matroids with at most five elements, graphical matroids of the
/// graph corpus, and two matroids with loops.
pub fn corpus_matroids() -> Vec<(String, Matroid)> {
    let mut out = Vec::new();
    for n in 0..=5usize {
        for k in 0..=n {
            out.push((
                format!("U({k},{n})"),
                uniform_matroid(k, n).expect("uniform corpus matroid"),
            ));
        }
    }
    for (name, g) in corpus_graphs() {
        out.push((
            format!("M({name})"),
            graphical_matroid(&g).expect("graphical corpus matroid"),
        ));
    }
    out.push((
        "loop-only".into(),
        Matroid::new(vec!["e".into()], &[0]).expect("single loop"),
    ));
    out.push((
        "loop-plus-coloop".into(),
        Matroid::new(vec!["a".into(), "b".into()], &[0b00, 0b10]).expect("loop plus free element"),
    ));
    out
}

/// The 3-chain plus [`RANDOM_DIGRAPHS`] random comparability digraphs on
/// 3..=6 vertices.
pub fn corpus_digraphs(seed: u64) -> Vec<(String, Digraph)> {
    let mut out = vec![(
        "chain3".into(),
        Digraph::from_indices(3, &[(0, 1), (1, 2), (0, 2)]).expect("chain digraph"),
    )];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..RANDOM_DIGRAPHS {
        let n = 3 + i % 4;
        let d = random_transitive_digraph(n, &mut rng);
        out.push((format!("P{n}/{i}"), d));
    }
    out
}

/// Samples a random partial order: orient a random DAG along the vertex
/// order, then close transitively. Every finite poset arises this way up to
/// relabeling.
pub fn random_transitive_digraph(n: usize, rng: &mut ChaCha8Rng) -> Digraph {
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        for cell in row.iter_mut().skip(i + 1) {
            *cell = rng.gen_bool(0.4);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| reach[i][j])
        .collect();
    Digraph::from_indices(n, &arcs).expect("transitive closure of a DAG is a valid digraph")
}

/// Labels with repeats allowed, so the tie rule gets exercised.
pub fn random_labeling(g: &Graph, rng: &mut ChaCha8Rng) -> Labeling {
    let labels: Vec<i64> = (0..g.edge_count())
        .map(|_| rng.gen_range(-4..=12))
        .collect();
    Labeling::new(g, labels).expect("label count matches edge count")
}

/// A shuffled injective labeling by 1..=|E|.
pub fn injective_labeling(g: &Graph, rng: &mut ChaCha8Rng) -> Labeling {
    let mut labels: Vec<i64> = (1..=g.edge_count() as i64).collect();
    labels.shuffle(rng);
    Labeling::new(g, labels).expect("label count matches edge count")
}

/// Random integer labels for matroid ground elements.
pub fn random_ground_labels(n: usize, rng: &mut ChaCha8Rng) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-4..=12)).collect()
}

/// A shuffled injective labeling of matroid ground elements.
pub fn injective_ground_labels(n: usize, rng: &mut ChaCha8Rng) -> Vec<i64> {
    let mut labels: Vec<i64> = (1..=n as i64).collect();
    labels.shuffle(rng);
    labels
}

/// Ten random weight vectors plus the all-zero and all-one vectors.
pub fn weight_batches(len: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let mut batches = Vec::with_capacity(12);
    for _ in 0..10 {
        batches.push((0..len).map(|_| rng.gen_range(-9..=9)).collect());
    }
    batches.push(vec![0; len]);
    batches.push(vec![1; len]);
    batches
}

/// Keeps each item independently with probability 1/2.
pub fn random_subset<T: Copy>(items: &[T], rng: &mut ChaCha8Rng) -> Vec<T> {
    items
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(0.5))
        .collect()
}
