use std::collections::BTreeMap;
use std::fs;

use citenet::acyclic::{preprint_transform, remove_loops, shrink_components, strong_components};
use citenet::extract::{self, arc_cut, cpm_path, island_size_csv, islands, Subnetwork};
use citenet::network::{network_stats, pajek, Network};
use citenet::rank::{self, hits};
use citenet::weights::{self, PathCount, WeightVector, WeightVisitor};
use citenet::{standardize, Method, NumericMode, StandardizedNetwork, WeightResult};
use serde_json::{json, Value};

use crate::args::{Kind, Options, Repair};
use crate::failure::Failure;
use crate::output::{weight_json, Manifest, Outputs, Summary};

/// Above this many arcs the default numeric mode is log space.
const LOG_MODE_ARCS: usize = 1_000_000;
const DEFAULT_TOP: usize = 15;

pub struct Report {
    pub summary: Summary,
    pub written: Vec<std::path::PathBuf>,
}

/// Validates, reads, computes and writes. Nothing is written unless every
/// step succeeds.
pub fn run(kind: Kind, opts: &Options) -> Result<Report, Failure> {
    opts.validate(kind)?;
    let bytes = fs::read(&opts.input).map_err(|e| Failure::io(opts.input.display(), e))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|e| Failure::parse(format!("{}: not UTF-8 text ({e})", opts.input.display())))?;
    let net = pajek::parse_pajek(text)?;

    let mut summary = Summary::default();
    summary.push("command", kind.name());
    summary.push("input", opts.input.display().to_string());
    summary.push("vertices", net.n());
    summary.push("arcs", net.m());
    let mut out = Outputs::new(&opts.out, &opts.input);
    let mut params = Parameters::default();

    match kind {
        Kind::Stats => stats(&net, &mut summary, &mut out),
        Kind::Repair => {
            let strategy = opts.repair.unwrap_or(Repair::Shrink);
            params.set("repair", strategy.name());
            let (fixed, clu) = repair(&net, strategy, &mut summary);
            let name = strategy.name();
            out.add(&format!("{name}.net"), pajek::write_pajek(&fixed, None)?);
            out.add(&format!("{name}.clu"), pajek::write_clu(&clu));
        }
        Kind::Hits => {
            let net = repaired(net, opts, &mut summary, &mut params);
            let top = opts.top.unwrap_or(DEFAULT_TOP);
            params.set("top", top);
            let scores = hits(&net, rank::DEFAULT_TOLERANCE, rank::DEFAULT_MAX_ITERATIONS)?;
            summary.push("iterations", scores.iterations);
            summary.push("residual", scores.residual);
            summary.push("converged", scores.converged);
            out.add("hits.txt", rank::top_table(&net, &scores, top));
            out.add("hits.csv", rank::top_csv(&net, &scores, top));
            out.add("hubs.vec", pajek::write_vec(&scores.hub));
            out.add("authorities.vec", pajek::write_vec(&scores.authority));
        }
        _ => {
            let net = repaired(net, opts, &mut summary, &mut params);
            let w = weigh(&net, opts, &mut summary, &mut params)?;
            extract_parts(kind, &net, &w, opts, &mut summary, &mut out, &mut params)?;
        }
    }

    let summary_json = summary.to_json();
    if kind == Kind::Weights {
        out.add(&format!("{}.txt", w_method(opts)), summary.to_text());
    }
    let written = out.write(Manifest {
        command: kind.name(),
        parameters: params.into_json(),
        input: &opts.input,
        input_bytes: &bytes,
        summary: summary_json,
    })?;
    Ok(Report { summary, written })
}

/// Resolved parameters, recorded in the manifest.
#[derive(Default)]
struct Parameters(BTreeMap<&'static str, Value>);

impl Parameters {
    fn set(&mut self, key: &'static str, value: impl Into<Value>) {
        self.0.insert(key, value.into());
    }

    fn into_json(self) -> Value {
        Value::Object(self.0.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }
}

fn w_method(opts: &Options) -> Method {
    opts.method.unwrap_or(Method::Spc)
}

fn stats(net: &Network, summary: &mut Summary, out: &mut Outputs) {
    let s = network_stats(net);
    summary.push("m0", s.m0);
    summary.push("n0", s.n0);
    summary.push("nC", s.n_c);
    summary.push("kC", s.k_c);
    summary.push("h", s.h);
    summary.push("deltaIn", s.delta_in);
    summary.push("deltaOut", s.delta_out);
    let counts: serde_json::Map<String, Value> = s
        .scc_size_counts
        .iter()
        .map(|(size, count)| (size.to_string(), json!(count)))
        .collect();
    summary.push("sccSizeCounts", Value::Object(counts));
    out.add("stats.txt", s.to_string());
}

/// The loop-free network made acyclic, and the strong component (1-based)
/// of every original vertex.
fn repair(net: &Network, strategy: Repair, summary: &mut Summary) -> (Network, Vec<usize>) {
    let clean = remove_loops(net);
    let parts = strong_components(&clean);
    let nontrivial = parts.class_sizes().iter().filter(|&&s| s >= 2).count();
    let fixed = match strategy {
        Repair::Shrink => shrink_components(&clean, &parts),
        Repair::Preprint => preprint_transform(&clean),
    };
    summary.push("repair", strategy.name());
    summary.push("loopsRemoved", net.m() - clean.m());
    summary.push("cyclicGroups", nontrivial);
    summary.push("repairedVertices", fixed.n());
    summary.push("repairedArcs", fixed.m());
    (fixed, parts.to_clu())
}

fn repaired(net: Network, opts: &Options, summary: &mut Summary, params: &mut Parameters) -> Network {
    match opts.repair {
        None => net,
        Some(strategy) => {
            params.set("repair", strategy.name());
            repair(&net, strategy, summary).0
        }
    }
}

/// Weights as configured, with the standard form they live on for the flow
/// methods.
struct Weighed {
    std: Option<StandardizedNetwork>,
    result: WeightResult,
}

fn weigh(net: &Network, opts: &Options, summary: &mut Summary, params: &mut Parameters) -> Result<Weighed, Failure> {
    let method = w_method(opts);
    let mode = if !method.is_flow() {
        NumericMode::Exact
    } else if opts.alpha.is_some() {
        NumericMode::Float
    } else {
        opts.mode.unwrap_or(if net.m() > LOG_MODE_ARCS { NumericMode::Log } else { NumericMode::Float })
    };
    params.set("method", method.name());
    params.set("mode", mode.name());
    params.set("alpha", opts.alpha);
    params.set("normalize", opts.normalize);
    params.set("log", opts.log);

    let (std, raw) = if method.is_flow() {
        let std = standardize(net)?;
        let raw = match (method, opts.alpha) {
            (Method::Spnp, Some(alpha)) => weights::aged_path_counts(&std, alpha)?,
            (Method::Spc, _) => weights::spc(&std, mode)?,
            (Method::Splc, _) => weights::splc(&std, mode)?,
            _ => weights::spnp(&std, mode)?,
        };
        (Some(std), raw)
    } else if method == Method::Nppc {
        (None, weights::nppc(net)?)
    } else {
        let sum = weights::sum_weights(net)?;
        let raw = if opts.normalize {
            let n = net.n().max(1) as f64;
            let vertex = sum.raw.vertex.to_linear_vec().into_iter().map(|x| x / n).collect();
            WeightResult {
                arc: sum.normalized.clone(),
                vertex: WeightVector::from_f64(vertex),
                normalized: true,
                ..sum.raw.clone()
            }
        } else {
            sum.raw
        };
        (None, raw)
    };

    summary.push("method", method.name());
    summary.push("mode", mode.name());
    if let Some(alpha) = opts.alpha {
        summary.push("alpha", alpha);
    }
    if let Some(total) = &raw.total_flow {
        summary.push("totalFlow", weight_json(total));
    }

    let mut result = if opts.normalize && method.is_flow() { weights::normalize(&raw)? } else { raw };
    if opts.log {
        result = weights::log_transform(&result);
    }
    summary.push("normalized", result.normalized);
    summary.push("logScale", opts.log || result.mode() == NumericMode::Log);
    let original = result.original_arc_weights();
    if let Some([lo, mid, hi]) = original.visit(Spread) {
        summary.push("minArcWeight", weight_json(&original.get(lo)));
        summary.push("medianArcWeight", weight_json(&original.get(mid)));
        summary.push("maxArcWeight", weight_json(&original.get(hi)));
    }
    summary.push("flooredArcs", result.floored_arcs.len());
    Ok(Weighed { std, result })
}

/// Indices of the smallest, the (lower) median and the largest value.
struct Spread;

impl WeightVisitor for Spread {
    type Output = Option<[usize; 3]>;

    fn visit<C: PathCount>(self, v: &[C]) -> Self::Output {
        if v.is_empty() {
            return None;
        }
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&a, &b| v[a].compare(&v[b]).then(a.cmp(&b)));
        Some([idx[0], idx[(v.len() - 1) / 2], idx[v.len() - 1]])
    }
}

fn extract_parts(
    kind: Kind,
    net: &Network,
    w: &Weighed,
    opts: &Options,
    summary: &mut Summary,
    out: &mut Outputs,
    params: &mut Parameters,
) -> Result<(), Failure> {
    let method = w_method(opts);
    let result = &w.result;
    let prefix = method.name();
    match kind {
        Kind::Weights => {
            let arcs = result.original_arc_weights();
            let vertices = result.original_vertex_weights();
            out.add(&format!("{prefix}.net"), pajek::write_pajek(net, Some(&arcs))?);
            out.add(&format!("{prefix}.vec"), pajek::write_vec((0..vertices.len()).map(|i| vertices.display(i))));
        }
        Kind::Mainpath | Kind::Cpm => {
            // validation admits only flow methods here
            let std = w.std.as_ref().expect("flow methods are standardized");
            let (path, name) = if kind == Kind::Cpm {
                (cpm_path(std, &result.arc)?, "cpm")
            } else {
                params.set("single", opts.single);
                let path = if opts.single {
                    extract::main_path_single(std, &result.arc)?
                } else {
                    extract::main_path(std, &result.arc)?
                };
                (path, "mainpath")
            };
            describe(&path, summary);
            if let Some(total) = &path.total_weight {
                summary.push("pathWeight", weight_json(total));
            }
            out.add(&format!("{prefix}.{name}.net"), path.to_pajek(net, Some(&result.arc))?);
        }
        Kind::Cut => {
            let threshold = opts.threshold.expect("validated");
            params.set("threshold", threshold);
            let arcs = result.original_arc_weights();
            let cut = arc_cut(net, &arcs, threshold)?;
            let main = cut.main_component(net);
            describe(&cut.subnetwork, summary);
            summary.push("threshold", threshold);
            summary.push("components", cut.components.len());
            summary.push("mainComponentVertices", main.vertices.len());
            let mut clu = vec![0; net.n()];
            for (i, comp) in cut.components.iter().enumerate() {
                for &v in comp {
                    clu[v] = i + 1;
                }
            }
            out.add(&format!("{prefix}.cut.net"), cut.subnetwork.to_pajek(net, Some(&arcs))?);
            out.add(&format!("{prefix}.cut.main.net"), main.to_pajek(net, Some(&arcs))?);
            out.add(&format!("{prefix}.cut.clu"), pajek::write_clu(&clu));
        }
        Kind::Islands => {
            let (k, big_k) = (opts.k.expect("validated"), opts.big_k.expect("validated"));
            params.set("k", k);
            params.set("K", big_k);
            let set = islands(net, &result.original_arc_weights(), k, big_k)?;
            summary.push("k", k);
            summary.push("K", big_k);
            summary.push("islands", set.islands.len());
            summary.push("islandVertices", set.islands.iter().map(|i| i.size()).sum::<usize>());
            out.add(&format!("{prefix}.islands.clu"), pajek::write_clu(&set.to_clu(net.n())));
            out.add(&format!("{prefix}.islands.txt"), set.table());
            out.add(&format!("{prefix}.islands.csv"), island_size_csv(&set));
        }
        Kind::Stats | Kind::Repair | Kind::Hits => unreachable!("not a weighted command"),
    }
    Ok(())
}

fn describe(sub: &Subnetwork, summary: &mut Summary) {
    summary.push("subnetwork", sub.kind.name());
    summary.push("subnetworkVertices", sub.vertices.len());
    summary.push("subnetworkArcs", sub.arcs.len());
}
