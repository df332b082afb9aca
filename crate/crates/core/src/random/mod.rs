//! Seeded `G(n, p)` sampling and Monte-Carlo experiments.
//!
//! Every trial draws from its own stream: a ChaCha8 generator keyed with
//! `seed_from_u64(seed)` and switched to stream number `trial_index`
//! (`set_stream`). Trial `i` therefore depends on `(seed, i)` alone, and the
//! reports are identical whatever the thread schedule.
//!
//! Up to order 4096 every unordered pair `(u, v)`, visited as
//! `v = 1..n, u = 0..v`, becomes an edge when `gen_range(0..q) < p` for the
//! probability `p/q`. Larger orders skip ahead geometrically using
//! floating-point logarithms, which is exact only in distribution.

mod experiments;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub use experiments::{
    collision_rate, fr_vanishes, fr_vanishing_rate, has_two_cycles_sharing_one_vertex,
    induced_cycles, max_degree_profile, triangle_free_blocks, triangle_in_blocks_rate,
    triangle_in_blocks_rate_on, two_cycle_incidence_rate,
};

/// Largest order for experiments that only need adjacency lists.
pub const MAX_STRUCTURAL_ORDER: usize = 100_000;

/// Orders above this use geometric skipping instead of per-pair draws.
const PER_PAIR_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeProbability {
    /// The same `p` at every order.
    Constant(Ratio<u64>),
    /// `p = d / n`.
    AverageDegree(Ratio<u64>),
}

impl EdgeProbability {
    pub fn at(&self, n: usize) -> Result<Ratio<u64>> {
        let p = match *self {
            EdgeProbability::Constant(p) => p,
            EdgeProbability::AverageDegree(d) => {
                if n == 0 {
                    Ratio::from_integer(0)
                } else {
                    d / Ratio::from_integer(n as u64)
                }
            }
        };
        if p > Ratio::from_integer(1) {
            return Err(Error::argument(format!("edge probability {p} exceeds 1")));
        }
        Ok(p)
    }
}

impl fmt::Display for EdgeProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeProbability::Constant(p) => write!(f, "p={}", ratio_string(p)),
            EdgeProbability::AverageDegree(d) => write!(f, "p={}/n", ratio_string(d)),
        }
    }
}

/// Parses `"p/q"` or an integer into an exact rational.
pub fn parse_ratio(text: &str) -> Result<Ratio<u64>> {
    Ratio::<u64>::from_str(text.trim())
        .map_err(|_| Error::argument(format!("expected a rational `p/q`, got `{text}`")))
}

/// Always `p/q`, also for integers.
pub fn ratio_string<T: fmt::Display>(r: &Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GnpParams {
    pub n: usize,
    pub p: EdgeProbability,
    pub seed: u64,
    pub trials: u64,
}

impl GnpParams {
    pub fn new(n: usize, p: EdgeProbability, seed: u64, trials: u64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::argument("trials must be at least 1"));
        }
        p.at(n)?;
        Ok(GnpParams { n, p, seed, trials })
    }

    pub fn with_order(&self, n: usize) -> Result<Self> {
        GnpParams::new(n, self.p, self.seed, self.trials)
    }

    fn json(&self) -> serde_json::Map<String, Value> {
        let mut m = serde_json::Map::new();
        m.insert("n".into(), self.n.into());
        match self.p {
            EdgeProbability::Constant(p) => m.insert("p".into(), ratio_string(&p).into()),
            EdgeProbability::AverageDegree(d) => m.insert("d".into(), ratio_string(&d).into()),
        };
        m.insert("seed".into(), self.seed.into());
        m.insert("trials".into(), self.trials.into());
        m
    }
}

/// The generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Adjacency lists for orders beyond the bitset representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseGraph {
    adj: Vec<Vec<u32>>,
}

impl SparseGraph {
    pub fn edgeless(n: usize) -> Self {
        SparseGraph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Edges must be distinct pairs of distinct vertices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SparseGraph::edgeless(n);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::argument(format!("invalid edge ({u}, {v}) for order {n}")));
            }
            g.adj[u].push(v as u32);
            g.adj[v].push(u as u32);
        }
        g.finish();
        Ok(g)
    }

    fn finish(&mut self) {
        for row in &mut self.adj {
            row.sort_unstable();
            row.dedup();
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbour list.
    pub fn neighbours(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn to_graph(&self) -> Result<Graph> {
        if self.order() > MAX_ORDER {
            return Err(Error::capacity("graph order", self.order(), MAX_ORDER));
        }
        let rows: Vec<u32> = self
            .adj
            .iter()
            .map(|row| row.iter().fold(0u32, |acc, &v| acc | 1 << v))
            .collect();
        Graph::from_rows(&rows)
    }
}

impl From<&Graph> for SparseGraph {
    fn from(g: &Graph) -> Self {
        SparseGraph {
            adj: (0..g.order())
                .map(|v| g.neighbours(v).iter().map(|u| u as u32).collect())
                .collect(),
        }
    }
}

/// Draws the edges of one `G(n, p)` sample from `rng`.
pub fn sample_with(n: usize, p: Ratio<u64>, rng: &mut ChaCha8Rng) -> SparseGraph {
    let mut g = SparseGraph::edgeless(n);
    let (num, den) = (*p.numer(), *p.denom());
    if num == 0 || n < 2 {
        return g;
    }
    let mut add = |u: usize, v: usize| {
        g.adj[u].push(v as u32);
        g.adj[v].push(u as u32);
    };
    if num >= den {
        for v in 1..n {
            for u in 0..v {
                add(u, v);
            }
        }
    } else if n <= PER_PAIR_LIMIT {
        for v in 1..n {
            for u in 0..v {
                if rng.gen_range(0..den) < num {
                    add(u, v);
                }
            }
        }
    } else {
        // index k of the pair (u, v) is v(v-1)/2 + u
        let log_q = (1.0 - num as f64 / den as f64).ln();
        let total = (n as u64) * (n as u64 - 1) / 2;
        let mut k: u64 = 0;
        let (mut v, mut base) = (1u64, 0u64);
        loop {
            let x: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            k += (x.ln() / log_q).floor() as u64;
            if k >= total {
                break;
            }
            while base + v <= k {
                base += v;
                v += 1;
            }
            add((k - base) as usize, v as usize);
            k += 1;
        }
    }
    g.finish();
    g
}

/// Trial `trial` of `params`, as adjacency lists.
pub fn sample_gnp_sparse(params: &GnpParams, trial: u64) -> Result<SparseGraph> {
    if params.n > MAX_STRUCTURAL_ORDER {
        return Err(Error::capacity("random graph order", params.n, MAX_STRUCTURAL_ORDER));
    }
    if trial >= params.trials {
        return Err(Error::argument(format!(
            "trial index {trial} out of range for {} trials",
            params.trials
        )));
    }
    let p = params.p.at(params.n)?;
    Ok(sample_with(params.n, p, &mut trial_rng(params.seed, trial)))
}

/// Trial `trial` of `params`; order at most 32.
pub fn sample_gnp(params: &GnpParams, trial: u64) -> Result<Graph> {
    if params.n > MAX_ORDER {
        return Err(Error::capacity("graph order", params.n, MAX_ORDER));
    }
    sample_gnp_sparse(params, trial)?.to_graph()
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub params: serde_json::Map<String, Value>,
    pub successes: u64,
    pub trials: u64,
    /// `successes / trials` as `p/q`.
    pub estimate: String,
    pub notes: Vec<String>,
    pub stats: BTreeMap<String, Value>,
}

impl ExperimentReport {
    fn new(experiment: &str, params: &GnpParams, successes: u64, trials: u64) -> Self {
        ExperimentReport {
            experiment: experiment.into(),
            params: params.json(),
            successes,
            trials,
            estimate: ratio_string(&Self::ratio(successes, trials)),
            notes: vec![format!(
                "trial i uses ChaCha8 seeded with seed_from_u64({}) on stream i",
                params.seed
            )],
            stats: BTreeMap::new(),
        }
    }

    fn ratio(successes: u64, trials: u64) -> Ratio<u64> {
        if trials == 0 {
            Ratio::from_integer(0)
        } else {
            Ratio::new(successes, trials)
        }
    }

    pub fn rate(&self) -> Ratio<u64> {
        Self::ratio(self.successes, self.trials)
    }

    pub const CSV_HEADER: &'static str = "experiment,n,seed,successes,trials,estimate";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.experiment,
            self.params.get("n").map(Value::to_string).unwrap_or_default(),
            self.params.get("seed").map(Value::to_string).unwrap_or_default(),
            self.successes,
            self.trials,
            self.estimate
        )
    }
}
