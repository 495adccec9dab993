#![allow(dead_code)]

pub mod suites;

use expander_lp::families::FamilySpec;
use expander_lp::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniform pairing-model sample of a connected simple `k`-regular graph.
pub fn random_regular<R: Rng>(rng: &mut R, v: usize, k: usize) -> Graph {
    assert!((v * k).is_multiple_of(2) && k < v);
    loop {
        let mut points: Vec<usize> = (0..v).flat_map(|x| std::iter::repeat_n(x, k)).collect();
        points.shuffle(rng);
        let mut g = Graph::empty(v);
        let mut ok = true;
        for pair in points.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            if a == b || g.has_edge(a, b) {
                ok = false;
                break;
            }
            g.add_edge(a, b).unwrap();
        }
        if ok && g.is_connected() {
            return g;
        }
    }
}

/// 100 random connected cubic graphs on 4 to 12 vertices, fixed seed.
pub fn random_cubic_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0b1c);
    (0..100)
        .map(|_| {
            let v = 2 * rng.random_range(2..=6);
            random_regular(&mut rng, v, 3)
        })
        .collect()
}

/// Generated family members with at most `cap` vertices.
pub fn small_family_graphs(cap: usize) -> Vec<(FamilySpec, Graph)> {
    FamilySpec::table_rows()
        .into_iter()
        .map(|s| (s, s.build().unwrap()))
        .filter(|(_, g)| g.vertex_count() <= cap)
        .collect()
}

/// Every connected cubic graph on `v` vertices up to isomorphism, possibly
/// with repeats.
///
/// Backtracking fills the smallest unsaturated vertex each step. The new
/// neighbours are chosen as a set, and among vertices with no edges yet only
/// the smallest ones may be used: those vertices are interchangeable, so this
/// drops only relabelled duplicates.
pub fn cubic_graphs(v: usize) -> Vec<Graph> {
    fn choose(
        cands: &[usize],
        m: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..cands.len() {
            cur.push(cands[i]);
            choose(cands, m, i + 1, cur, out);
            cur.pop();
        }
    }

    fn rec(adj: &mut Vec<Vec<usize>>, out: &mut Vec<Graph>) {
        let v = adj.len();
        let Some(u) = (0..v).find(|&x| adj[x].len() < 3) else {
            let g = Graph::from_edges(
                v,
                (0..v).flat_map(|a| adj[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b))),
            )
            .unwrap();
            if g.is_connected() {
                out.push(g);
            }
            return;
        };
        let need = 3 - adj[u].len();
        let touched: Vec<usize> = (u + 1..v)
            .filter(|&w| !adj[w].is_empty() && adj[w].len() < 3 && !adj[u].contains(&w))
            .collect();
        let untouched: Vec<usize> = (u + 1..v).filter(|&w| adj[w].is_empty()).collect();
        for fresh in 0..=need.min(untouched.len()) {
            let mut picks = Vec::new();
            choose(&touched, need - fresh, 0, &mut Vec::new(), &mut picks);
            for mut set in picks {
                set.extend_from_slice(&untouched[..fresh]);
                for &w in &set {
                    adj[u].push(w);
                    adj[w].push(u);
                }
                rec(adj, out);
                for &w in &set {
                    adj[u].pop();
                    let pos = adj[w].iter().rposition(|&x| x == u).unwrap();
                    adj[w].remove(pos);
                }
            }
        }
    }

    let mut out = Vec::new();
    rec(&mut vec![Vec::new(); v], &mut out);
    out
}
