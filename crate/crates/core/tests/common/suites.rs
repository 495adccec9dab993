//! Oracle checks shared by the property tests and the acceptance run. Each
//! returns a short summary on success and the first counterexample otherwise.

use expander_lp::families::FamilySpec;
use expander_lp::graph::edge_expansion;
use expander_lp::lpbound::{default_degree, duality_gap, lp_bound_dual, lp_bound_primal};
use expander_lp::orthopoly::{linearize, weighted_inner_product};
use expander_lp::spectral::{self, f_of_a, girth_via_traces, traces};
use expander_lp::Graph;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Outcome = Result<String, String>;

/// Family graphs with at most 12 vertices plus the random cubic corpus.
pub fn path_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = super::small_family_graphs(12).into_iter().map(|(_, g)| g).collect();
    out.extend(super::random_cubic_corpus());
    out
}

pub fn path_counts(graphs: &[Graph]) -> Outcome {
    let mut entries = 0usize;
    for (n, g) in graphs.iter().enumerate() {
        let v = g.vertex_count();
        for i in 0..=6 {
            let m = f_of_a(g, i).map_err(|e| e.to_string())?;
            for u in 0..v {
                let counts = g.irreducible_path_counts_from(u, i).map_err(|e| e.to_string())?;
                for w in 0..v {
                    if counts[w] as i128 != m.get(u, w) {
                        return Err(format!("graph {n}, i={i}, ({u},{w}): {} vs {}", counts[w], m.get(u, w)));
                    }
                    entries += 1;
                }
            }
        }
    }
    Ok(format!("{} graphs, {entries} entries", graphs.len()))
}

pub fn girth_agreement(graphs: &[Graph]) -> Outcome {
    for (n, g) in graphs.iter().enumerate() {
        let t = girth_via_traces(g).map_err(|e| e.to_string())?;
        if Some(t) != g.girth() {
            return Err(format!("graph {n}: traces {t}, bfs {:?}", g.girth()));
        }
    }
    Ok(format!("{} graphs", graphs.len()))
}

pub fn trace_nonnegativity(graphs: &[Graph]) -> Outcome {
    for (n, g) in graphs.iter().enumerate() {
        let t = traces(g, 12).map_err(|e| e.to_string())?;
        if let Some(i) = t.iter().position(|&x| x < 0) {
            return Err(format!("graph {n}: tr F_{i} = {}", t[i]));
        }
    }
    Ok(format!("{} graphs, i <= 12", graphs.len()))
}

pub fn linearization() -> Outcome {
    let mut count = 0;
    for k in 3..=6 {
        for i in 0..=8 {
            for j in 0..=8 {
                let p = linearize::<BigRational>(k, i, j).map_err(|e| e.to_string())?;
                for (l, c) in p.iter().enumerate() {
                    let support = i.abs_diff(j) <= l && l <= i + j && (l + i + j) % 2 == 0;
                    if c.is_negative() || c.is_zero() == support {
                        return Err(format!("k={k}: p_{l}({i},{j}) = {c}"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} coefficients, exact"))
}

pub fn orthogonality() -> Outcome {
    let mut worst = 0.0f64;
    for k in 3..=5 {
        for i in 0..=8 {
            for j in 0..i {
                let ip = weighted_inner_product(k, i, j, 100, 20).map_err(|e| e.to_string())?;
                if ip.abs() > 1e-6 {
                    return Err(format!("k={k}: <F{i},F{j}> = {ip:e}"));
                }
                worst = worst.max(ip.abs());
            }
        }
    }
    Ok(format!("max |<F_i,F_j>| = {worst:.1e}"))
}

/// `(spec, k, nontrivial distinct eigenvalues)` for every table row.
pub fn table_spectra() -> Vec<(FamilySpec, u32, Vec<f64>)> {
    FamilySpec::table_rows()
        .into_iter()
        .map(|s| {
            let p = s.expected_profile().unwrap();
            let taus = p.spectrum[1..].iter().map(|&(x, _)| x).collect();
            (s, p.k as u32, taus)
        })
        .collect()
}

pub fn duality() -> Outcome {
    let mut worst = 0.0f64;
    for (spec, k, taus) in table_spectra() {
        let u = default_degree(taus.len());
        let primal = lp_bound_primal(k, &taus, u).map_err(|e| e.to_string())?;
        let dual = lp_bound_dual(k, &taus, u).map_err(|e| e.to_string())?;
        let gap = duality_gap(&primal, &dual).ok_or(format!("{spec}: not optimal"))?;
        if gap.abs() > 1e-6 {
            return Err(format!("{spec}: gap {gap:e}"));
        }
        worst = worst.max(gap.abs());
    }
    Ok(format!("max gap {worst:.1e}"))
}

pub fn soundness_and_monotonicity() -> Outcome {
    for (spec, k, taus) in table_spectra() {
        let v = spec.expected_profile().unwrap().v as f64;
        let d = taus.len();
        let bound = lp_bound_dual(k, &taus, default_degree(d)).map_err(|e| e.to_string())?.objective;
        if v > bound + 1e-6 {
            return Err(format!("{spec}: v = {v} > {bound}"));
        }
        let mut prev = f64::INFINITY;
        for u in d..=2 * d + 2 {
            let b = lp_bound_dual(k, &taus, u).map_err(|e| e.to_string())?.objective;
            if b > prev + 1e-6 {
                return Err(format!("{spec}: u={u} gives {b} > {prev}"));
            }
            prev = b;
        }
    }
    Ok("all table spectra".into())
}

/// Regular test graphs on at most 24 vertices for the expansion check.
pub fn expansion_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = super::small_family_graphs(24).into_iter().map(|(_, g)| g).collect();
    out.extend(super::random_cubic_corpus().into_iter().step_by(5));
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for (v, k) in [(16, 4), (20, 3), (24, 3)] {
        out.push(super::random_regular(&mut rng, v, k));
    }
    out
}

pub fn sandwich(graphs: &[Graph]) -> Outcome {
    for (n, g) in graphs.iter().enumerate() {
        let k = g.regularity().ok_or("irregular test graph")? as f64;
        let tau = spectral::spectral_gap(g).map_err(|e| e.to_string())?;
        let h = edge_expansion(g).map_err(|e| e.to_string())?.h;
        let hf = *h.numer() as f64 / *h.denom() as f64;
        if tau / 2.0 > hf + 1e-9 || hf > (2.0 * k * tau).sqrt() + 1e-9 {
            return Err(format!("graph {n}: tau = {tau}, h = {h}"));
        }
    }
    Ok(format!("{} graphs", graphs.len()))
}
