//! Exhaustive spread maximization over `K_r`-minor-free graphs.

mod enumerate;
mod structure;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::{canonical_labeling, emit_graph6, make_family, CanonicalCode, FamilySpec, Graph};
use crate::join_series::closed_form_extremal_spread;
use crate::minor::{has_clique_minor, mader_exact_form};
use crate::spectral::{spread, TIE_TOL};

pub use enumerate::{
    enumerate_graphs, ingest_graph6_stream, ingest_reader, Graph6Lines, Ingested,
    ENUMERATE_MAX_ORDER,
};
pub use structure::{
    luv_partition, rewire_to_join, structure_check, top_degree_set, uv_facts, LUVPartition,
    UvFacts,
};

/// Knobs for [`search_max_spread`].
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Number of independent shards processed in parallel.
    pub shards: usize,
    /// Reject graphs above `(r−2)n − C(r−1,2)` edges without a minor search
    /// (valid for `r ≤ 7`, `n ≥ r−2`).
    pub edge_prescreen: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            shards: 1,
            edge_prescreen: true,
        }
    }
}

/// One `K_r`-minor-free graph with its extreme eigenvalues.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurvivorRow {
    pub graph6: String,
    pub edges: usize,
    pub lambda1: f64,
    pub lambdan: f64,
    pub spread: f64,
}

/// Structural record for one maximizer.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaximizerDetail {
    pub graph6: String,
    /// Whether the graph is `G[L] ∨ (n−r+2)K₁`.
    pub join_shape: bool,
    /// `L` used for the `U/V` facts: the join's `L` when `join_shape`,
    /// otherwise the `r−2` highest-degree vertices.
    pub l: Vec<usize>,
    pub facts: UvFacts,
    /// Spread change from [`rewire_to_join`] on `L`; zero when already a join.
    pub rewire_delta: f64,
    pub rewired_graph6: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub r: usize,
    pub family_size: usize,
    pub survivors: usize,
    /// graph6 (canonical labeling) of every graph within the tie threshold
    /// of the maximum spread.
    pub maximizers: Vec<String>,
    pub max_spread: f64,
    /// `√(4(r−2)(n−r+2) + (r−3)²)`.
    pub formula_value: f64,
    /// Every maximizer has the join shape.
    pub structure_ok: bool,
    pub max_edges: usize,
    /// `(r−2)n − C(r−1,2)`.
    pub mader_edges: i64,
    /// graph6 of `K_{r−2} ∨ (n−r+2)K₁` in canonical labeling.
    pub predicted: String,
    /// The predicted graph is the unique maximizer.
    pub predicted_wins: bool,
    pub details: Vec<MaximizerDetail>,
    #[serde(skip)]
    pub rows: Vec<SurvivorRow>,
}

impl SearchReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in &self.rows {
            w.serialize(row)?;
        }
        if self.rows.is_empty() {
            w.write_record(["graph6", "edges", "lambda1", "lambdan", "spread"])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Writes `search_r{r}_n{n}.json` and `.csv` into `dir`.
    pub fn write_files(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        let stem = format!("search_r{}_n{}", self.r, self.n);
        std::fs::write(dir.join(format!("{stem}.json")), self.to_json()? + "\n")?;
        self.write_csv(std::fs::File::create(dir.join(format!("{stem}.csv")))?)
    }
}

/// Partial result of one shard; merging is concatenation in code order.
#[derive(Debug, Default)]
struct ShardResult {
    rows: Vec<(CanonicalCode, Graph, SurvivorRow)>,
}

impl ShardResult {
    fn merge(mut self, other: ShardResult) -> ShardResult {
        self.rows.extend(other.rows);
        self.rows.sort_by_key(|(code, _, _)| *code);
        self
    }
}

fn survives(g: &Graph, r: usize, opts: &SearchOptions) -> Result<bool> {
    let (n, e) = (g.order(), g.size());
    if n < r || e < r * (r - 1) / 2 {
        return Ok(true);
    }
    if opts.edge_prescreen && r <= 7 && n + 2 >= r && e as i64 > mader_exact_form(r, n) {
        return Ok(false);
    }
    Ok(has_clique_minor(g, r)?.is_none())
}

fn process(
    shard: &[(CanonicalCode, Graph)],
    r: usize,
    opts: &SearchOptions,
) -> std::result::Result<ShardResult, (usize, Error)> {
    let mut out = ShardResult::default();
    for (i, (code, g)) in shard.iter().enumerate() {
        let keep = survives(g, r, opts).map_err(|e| (i, e))?;
        if !keep {
            continue;
        }
        let s = spread(g).map_err(|e| (i, e))?;
        let row = SurvivorRow {
            graph6: emit_graph6(g).map_err(|e| (i, e))?,
            edges: g.size(),
            lambda1: s.lambda1,
            lambdan: s.lambdan,
            spread: s.spread,
        };
        out.rows.push((*code, g.clone(), row));
    }
    Ok(out)
}

fn canonical_form(g: &Graph) -> Result<(CanonicalCode, Graph)> {
    let (code, perm) = canonical_labeling(g)?;
    Ok((code, g.relabel(&perm)?))
}

/// Filters `graphs` to the `K_r`-minor-free ones, computes their spreads and
/// reports the maximizers. Isomorphic inputs are counted once. The report
/// does not depend on `opts.shards`.
pub fn search_max_spread<I>(n: usize, r: usize, graphs: I, opts: SearchOptions) -> Result<SearchReport>
where
    I: IntoIterator<Item = Graph>,
{
    if r < 3 || r > n {
        return Err(domain(format!("search needs 3 <= r <= n, got r={r}, n={n}")));
    }
    let mut classes: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    for (i, g) in graphs.into_iter().enumerate() {
        if g.order() != n {
            return Err(domain(format!("input graph {i} has {} vertices, expected {n}", g.order())));
        }
        let (code, canon) = canonical_form(&g)?;
        classes.entry(code).or_insert(canon);
    }
    let family: Vec<(CanonicalCode, Graph)> = classes.into_iter().collect();
    let shards = opts.shards.max(1);
    let chunk = family.len().div_ceil(shards).max(1);
    let pieces: Vec<std::result::Result<ShardResult, (usize, Error)>> = family
        .par_chunks(chunk)
        .map(|c| process(c, r, &opts))
        .collect();
    let mut merged = ShardResult::default();
    for (k, piece) in pieces.into_iter().enumerate() {
        match piece {
            Ok(part) => merged = merged.merge(part),
            Err((i, e)) => {
                return Err(Error::SearchAborted {
                    processed: k * chunk + i,
                    source: Box::new(e),
                })
            }
        }
    }
    finish(n, r, family.len(), merged)
}

fn finish(n: usize, r: usize, family_size: usize, merged: ShardResult) -> Result<SearchReport> {
    let predicted_graph = make_family(FamilySpec::JoinStar { r, n })?;
    let predicted = emit_graph6(&canonical_form(&predicted_graph)?.1)?;
    let max_spread = merged
        .rows
        .iter()
        .map(|(_, _, row)| row.spread)
        .fold(f64::NEG_INFINITY, f64::max);
    let winners: Vec<&(CanonicalCode, Graph, SurvivorRow)> = merged
        .rows
        .iter()
        .filter(|(_, _, row)| row.spread >= max_spread - TIE_TOL)
        .collect();
    let mut details = Vec::with_capacity(winners.len());
    for (_, g, row) in &winners {
        details.push(maximizer_detail(g, r, row)?);
    }
    let maximizers: Vec<String> = winners.iter().map(|(_, _, row)| row.graph6.clone()).collect();
    Ok(SearchReport {
        n,
        r,
        family_size,
        survivors: merged.rows.len(),
        predicted_wins: maximizers.len() == 1 && maximizers[0] == predicted,
        structure_ok: !details.is_empty() && details.iter().all(|d| d.join_shape),
        maximizers,
        max_spread,
        formula_value: closed_form_extremal_spread(r, n)?,
        max_edges: merged.rows.iter().map(|(_, _, row)| row.edges).max().unwrap_or(0),
        mader_edges: mader_exact_form(r, n),
        predicted,
        details,
        rows: merged.rows.into_iter().map(|(_, _, row)| row).collect(),
    })
}

fn maximizer_detail(g: &Graph, r: usize, row: &SurvivorRow) -> Result<MaximizerDetail> {
    let join = structure_check(g, r);
    let l = join.unwrap_or_else(|| top_degree_set(g, r - 2));
    let part = luv_partition(g, l)?;
    let rewired = rewire_to_join(g, l)?;
    let delta = if join.is_some() {
        0.0
    } else {
        spread(&rewired)?.spread - row.spread
    };
    Ok(MaximizerDetail {
        graph6: row.graph6.clone(),
        join_shape: join.is_some(),
        l: l.to_vec(),
        facts: uv_facts(g, &part),
        rewire_delta: delta,
        rewired_graph6: emit_graph6(&rewired)?,
    })
}

/// Smallest `n` from which the predicted graph wins in every later report,
/// over reports for one `r` sorted by `n`.
pub fn predicted_win_threshold(reports: &[SearchReport]) -> Option<usize> {
    let mut threshold = None;
    for rep in reports.iter().rev() {
        if !rep.predicted_wins {
            break;
        }
        threshold = Some(rep.n);
    }
    threshold
}
