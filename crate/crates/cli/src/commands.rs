use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use permatch::autiso::{automorphism_group, canonical_form};
use permatch::classify::{classification_report, verify_catalog_membership};
use permatch::graph::*;
use permatch::matchsym::{analyze_matching, find_matching, is_arc_transitive, Mode};
use permatch::polygonal::{near_polygonal_certificate, quotient_by_partition};
use permatch::voltage::{derived_cover_with_cap, spanning_tree, standard_assignment};
use permatch::PermGroup;

use crate::input::*;
use crate::{CliError, Command, MatchingCommand, Outcome};

type Run = Result<Outcome, CliError>;

pub fn run(command: &Command) -> Run {
    match command {
        Command::Gen { family, params, out } => gen(family, params, out.as_deref()),
        Command::Aut { graph } => aut(graph),
        Command::Matching { action } => match action {
            MatchingCommand::Analyze { graph, edges, group, check } => {
                matching_analyze(graph, edges, group.as_deref(), check.as_deref())
            }
            MatchingCommand::Find { graph, m, mode, group } => {
                matching_find(graph, *m, mode, group.as_deref())
            }
        },
        Command::Cover { graph, p, tree_contains, cycle_lift, group, cap, out, fibers, voltages } => {
            cover(&CoverArgs {
                graph,
                p: *p,
                tree_contains: tree_contains.as_deref(),
                cycle_lift: *cycle_lift,
                group: group.as_deref(),
                cap: *cap,
                out: out.as_deref(),
                fibers: fibers.as_deref(),
                voltages: voltages.as_deref(),
            })
        }
        Command::NearPolygonal { graph, group } => near_polygonal(graph, group.as_deref()),
        Command::Quotient { graph, partition, group } => quotient(graph, partition, group.as_deref()),
        Command::Classify { m, mode, membership } => classify(*m, mode, *membership),
    }
}

fn holds(result: Value) -> Run {
    Ok(Outcome { result, holds: true })
}

fn parse_mode(text: &str) -> Result<Mode, CliError> {
    Ok(text.parse::<Mode>()?)
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::invalid(format!("cannot write {}: {e}", path.display())))
}

fn int(params: &[String], i: usize) -> Result<usize, CliError> {
    let raw = params
        .get(i)
        .ok_or_else(|| CliError::invalid(format!("missing parameter {}", i + 1)))?;
    raw.parse()
        .map_err(|_| CliError::invalid(format!("expected an integer, got {raw:?}")))
}

fn graph_param(params: &[String], i: usize) -> Result<Graph, CliError> {
    let raw = params
        .get(i)
        .ok_or_else(|| CliError::invalid(format!("missing graph parameter {}", i + 1)))?;
    if Path::new(raw).is_file() {
        read_graph(Path::new(raw))
    } else {
        named_graph(raw)
    }
}

fn summary(g: &Graph) -> Value {
    json!({
        "graph6": graph6_encode(g),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "regular_degree": g.regular_degree(),
    })
}

fn gen(family: &str, params: &[String], out: Option<&Path>) -> Run {
    let mut extra = json!({});
    let g = match family {
        "petersen" => petersen(),
        "complete" => complete(int(params, 0)?)?,
        "empty" => empty_graph(int(params, 0)?)?,
        "cycle" => cycle(int(params, 0)?)?,
        "path" => path(int(params, 0)?)?,
        "complete-bipartite" => complete_bipartite(int(params, 0)?, int(params, 1)?)?,
        "odd" => {
            let o = odd_graph(int(params, 0)?)?;
            extra = json!({
                "generators": o.generators.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "permutable_matching": o.permutable_matching().ok().map(|m| m.to_string()),
                "two_transitive_matching": o.two_transitive_matching().ok().map(|m| m.to_string()),
            });
            o.graph
        }
        "hypercube" => hypercube(int(params, 0)?)?,
        "folded-hypercube" => folded_hypercube(int(params, 0)?)?,
        "paley" => paley_incidence(int(params, 0)?)?,
        "paley-cliques" => paley_incidence_cliques(int(params, 0)?)?,
        "join" => join(&graph_param(params, 0)?, &graph_param(params, 1)?),
        "matching-join" => {
            let (g1, g2) = (graph_param(params, 0)?, graph_param(params, 1)?);
            let phi: Vec<usize> = (0..g1.vertex_count()).collect();
            matching_join(&g1, &g2, &phi)?
        }
        "composition" => composition(&graph_param(params, 0)?, int(params, 1)?)?,
        "complement" => complement(&graph_param(params, 0)?),
        _ => return Err(CliError::invalid(format!("unknown family {family:?}"))),
    };
    if let Some(path) = out {
        write(path, &(graph6_encode(&g) + "\n"))?;
    }
    let mut result = summary(&g);
    if let (Value::Object(r), Value::Object(e)) = (&mut result, extra) {
        r.extend(e);
    }
    holds(result)
}

fn generators(group: &PermGroup) -> Vec<String> {
    group.generators().iter().map(ToString::to_string).collect()
}

fn aut(path: &Path) -> Run {
    let g = read_graph(path)?;
    let group = automorphism_group(&g);
    let canon = canonical_form(&g);
    let arc_transitive = if is_connected(&g) {
        Some(is_arc_transitive(&g, &group)?)
    } else {
        None
    };
    holds(json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "order": group.order().to_string(),
        "generators": generators(&group),
        "orbits": group.orbits(),
        "arc_transitive": arc_transitive,
        "canonical_graph6": canon.canonical_graph6,
        "canonical_labeling": canon.canonical_labeling.images(),
    }))
}

fn matching_analyze(path: &Path, edges: &str, group: Option<&str>, check: Option<&str>) -> Run {
    let g = read_graph(path)?;
    let m = parse_matching(edges)?;
    m.validate(&g)?;
    if !m.is_matching_in(&g) {
        return Err(CliError::invalid(format!("{m} is not a matching")));
    }
    let group = read_group(group, &g)?;
    let report = analyze_matching(&g, Some(&group), &m)?;
    let holds = match check {
        Some(mode) => report.satisfies(parse_mode(mode)?),
        None => true,
    };
    let result = serde_json::to_value(&report).expect("reports serialize");
    Ok(Outcome { result, holds })
}

fn matching_find(path: &Path, m: usize, mode: &str, group: Option<&str>) -> Run {
    let g = read_graph(path)?;
    let mode = parse_mode(mode)?;
    let group = read_group(group, &g)?;
    let found = find_matching(&g, &group, m, mode)?;
    let report = match &found {
        Some(matching) => Some(analyze_matching(&g, Some(&group), matching)?),
        None => None,
    };
    Ok(Outcome {
        holds: found.is_some(),
        result: json!({
            "found": found.is_some(),
            "matching": found.map(|x| x.to_string()),
            "report": report,
        }),
    })
}

struct CoverArgs<'a> {
    graph: &'a Path,
    p: usize,
    tree_contains: Option<&'a str>,
    cycle_lift: bool,
    group: Option<&'a str>,
    cap: usize,
    out: Option<&'a Path>,
    fibers: Option<&'a Path>,
    voltages: Option<&'a Path>,
}

fn cover(args: &CoverArgs) -> Run {
    let g = read_graph(args.graph)?;
    let required = match args.tree_contains {
        Some(text) => Some(parse_matching(text)?),
        None => None,
    };
    let required_edges = required.as_ref().map_or(&[][..], |m| m.edges());
    let tree = spanning_tree(&g, required_edges)?;
    let xi = standard_assignment(&g, args.p, &tree)?;
    let cover = derived_cover_with_cap(&xi, args.cap)?;
    let group = read_group(args.group, &g)?;
    let lifted = xi.lift_group(&cover, &group)?;

    if let Some(path) = args.out {
        write(path, &(graph6_encode(&cover.graph) + "\n"))?;
    }
    if let Some(path) = args.fibers {
        let map: Vec<Value> = (0..cover.graph.vertex_count())
            .map(|x| {
                let (v, h) = xi.fiber_of(x);
                json!([v, h])
            })
            .collect();
        write(path, &serde_json::to_string(&map).expect("fiber map serializes"))?;
    }
    if let Some(path) = args.voltages {
        write(path, &serde_json::to_string_pretty(&xi.to_json()).expect("assignment serializes"))?;
    }

    let mut result = json!({
        "base_vertices": g.vertex_count(),
        "base_edges": g.edge_count(),
        "p": args.p,
        "k": xi.k(),
        "tree": xi.tree(),
        "cover_vertices": cover.graph.vertex_count(),
        "cover_edges": cover.graph.edge_count(),
        "connected": cover.connected,
        "locally_bijective": cover.locally_bijective,
        "lifted_group_order": lifted.order().to_string(),
    });
    if let Some(m) = &required {
        if m.is_matching_in(&g) {
            let lifted_m = xi.lifted_tree_matching(m)?;
            let report = analyze_matching(&cover.graph, Some(&lifted), &lifted_m)?;
            result["tree_matching"] = json!({"matching": lifted_m.to_string(), "report": report});
        }
    }
    if args.cycle_lift {
        let system = near_polygonal_certificate(&g, &group)?
            .ok_or_else(|| CliError::invalid("the base graph has no invariant cycle system"))?;
        let lifted_m = xi.lifted_cycle_matching(0, &system)?;
        let report = analyze_matching(&cover.graph, Some(&lifted), &lifted_m)?;
        result["cycle_matching"] = json!({
            "cycle_length": system.length,
            "matching": lifted_m.to_string(),
            "report": report,
        });
    }
    holds(result)
}

fn near_polygonal(path: &Path, group: Option<&str>) -> Run {
    let g = read_graph(path)?;
    let group = read_group(group, &g)?;
    let system = near_polygonal_certificate(&g, &group)?;
    Ok(Outcome {
        holds: system.is_some(),
        result: json!({
            "certified": system.is_some(),
            "girth": girth(&g),
            "length": system.as_ref().map(|s| s.length),
            "cycle_count": system.as_ref().map(|s| s.len()),
            "cycles": system.as_ref().map(|s| &s.cycles),
        }),
    })
}

fn quotient(path: &Path, partition: &Path, group: Option<&str>) -> Run {
    let g = read_graph(path)?;
    let blocks = read_partition(partition, g.vertex_count())?;
    let group = match group {
        Some(spec) => Some(read_group(Some(spec), &g)?),
        None => None,
    };
    let q = quotient_by_partition(&g, &blocks, group.as_ref())?;
    holds(json!({
        "quotient": summary(&q.quotient),
        "blocks": blocks.blocks,
        "block_of": q.block_of,
        "regular_cover": q.regular_cover,
    }))
}

fn classify(m: usize, mode: &str, membership: bool) -> Run {
    let mode = parse_mode(mode)?;
    if membership {
        let report = verify_catalog_membership(m, mode)?;
        Ok(Outcome {
            holds: report.all_witnessed,
            result: serde_json::to_value(&report).expect("reports serialize"),
        })
    } else {
        let report = classification_report(m, mode)?;
        Ok(Outcome {
            holds: report.matches,
            result: serde_json::to_value(&report).expect("reports serialize"),
        })
    }
}
