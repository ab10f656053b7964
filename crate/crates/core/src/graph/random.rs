//! Seeded random graphs for search starting points and property tests.

use rand::Rng;

use super::Graph;

/// Random cactus on `n >= 1` vertices, grown by attaching a pendant edge or a
/// cycle at a uniformly chosen vertex. With `tree_only` only pendant edges
/// are attached.
pub fn random_cactus<R: Rng + ?Sized>(n: usize, rng: &mut R, tree_only: bool) -> Graph {
    assert!(n >= 1);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut size = 1;
    while size < n {
        let at = rng.gen_range(0..size);
        let room = n - size;
        let cycle_len = if tree_only || room < 2 || rng.gen_bool(0.5) { 0 } else { rng.gen_range(3..=room + 1) };
        if cycle_len == 0 {
            edges.push((at, size));
            size += 1;
        } else {
            let mut ring = vec![at];
            ring.extend(size..size + cycle_len - 1);
            for i in 0..ring.len() {
                edges.push((ring[i], ring[(i + 1) % ring.len()]));
            }
            size += cycle_len - 1;
        }
    }
    Graph::from_edges(n, edges).expect("block attachment yields a simple graph")
}

/// Rejection-samples a random cactus with exactly `k` pendant vertices.
pub fn random_cactus_with_k<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    rng: &mut R,
    tree_only: bool,
    attempts: usize,
) -> Option<Graph> {
    (0..attempts).map(|_| random_cactus(n, rng, tree_only)).find(|g| g.pendant_count() == k)
}

/// Random connected graph: a random recursive tree plus each remaining pair
/// independently with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("no duplicates by construction")
}
