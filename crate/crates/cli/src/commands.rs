use std::path::{Path, PathBuf};

use arcgrid::families::{
    canonical_cycle_power_model, cycle_power, random_ca_model, random_interval_model, spider_fixture, thick_spider,
    thick_spider_model, SpiderFixture,
};
use arcgrid::formats::{emit_arcs, emit_graph, emit_paths, parse_arcs, parse_graph, parse_paths};
use arcgrid::recognition::{cycle_power_contains_criterion, decide_b1_epr, find_induced, is_chordal, B1Decision};
use arcgrid::render::{render_ascii, render_svg};
use arcgrid::transforms::{ca_to_b3_epg, ca_to_b4_epr, find_four_points, nca_to_b2_epr, nhca_to_b1_epr, FourPoints};
use arcgrid::verify::{check_grid_model, Requirements};
use arcgrid::{CircularArcModel, Graph, GridModel};
use serde_json::{json, Value};

use crate::report::{Input, Report};
use crate::{Cli, Command, Family, Target};

type Outcome = Result<Report, String>;

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Gen { family } => gen(family, cli.seed),
        Command::Convert { to, inputs, out_dir } => convert(*to, inputs, out_dir.as_deref()),
        Command::Analyze { input, criterion } => analyze(input.as_deref(), criterion.as_deref()),
        Command::Decide { input } => decide(input),
        Command::Subgraph { input, target } => subgraph(input, target),
        Command::Verify {
            paths,
            against,
            max_bends,
            epr,
            nh,
        } => verify(
            paths,
            against,
            Requirements {
                max_bends: *max_bends,
                epr: *epr,
                nh: *nh,
            },
        ),
        Command::Render { input, svg, .. } => render(input, *svg),
    }
}

fn read(path: &Path) -> Result<Input, String> {
    std::fs::read_to_string(path)
        .map(|text| Input::new(path.display().to_string(), text))
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn with_path<T>(path: &str, r: arcgrid::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("{path}: {e}"))
}

/// Reads a `.graph` file, or the intersection graph of a `.arcs` file.
fn graph_of(input: &Input) -> Result<Graph, String> {
    let header = input.text.split_whitespace().next().unwrap_or("");
    match header {
        "graph" => with_path(&input.path, parse_graph(&input.text)),
        "arcs" => with_path(&input.path, parse_arcs(&input.text)).map(|m| m.intersection_graph()),
        _ => Err(format!("{}: expected an `arcs` or `graph` header", input.path)),
    }
}

fn graph_summary(g: &Graph) -> Value {
    json!({ "vertices": g.order(), "edges": g.size() })
}

fn points_json(fp: &FourPoints) -> Value {
    json!(fp.points().iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn gen(family: &Family, seed: u64) -> Outcome {
    let model_report = |name: &str, m: CircularArcModel| {
        let g = m.intersection_graph();
        let mut r = Report::new(json!({ "family": name, "format": "arcs", "arcs": m.n(), "graph": graph_summary(&g) }));
        r.line(format!("{name}: {} arcs, {} edges", m.n(), g.size()));
        r.artifact = Some(emit_arcs(&m));
        r
    };
    let graph_report = |name: &str, g: Graph| {
        let mut r = Report::new(json!({ "family": name, "format": "graph", "graph": graph_summary(&g) }));
        r.line(format!("{name}: {} vertices, {} edges", g.order(), g.size()));
        r.artifact = Some(emit_graph(&g));
        r
    };
    let invalid = |e: arcgrid::Error| e.to_string();
    Ok(match *family {
        Family::CyclePower { n, k, model: true } => {
            model_report("cycle-power", canonical_cycle_power_model(n, k).map_err(invalid)?)
        }
        Family::CyclePower { n, k, model: false } => graph_report("cycle-power", cycle_power(n, k).map_err(invalid)?),
        Family::Spider { n, model: true } => model_report("spider", thick_spider_model(n).map_err(invalid)?),
        Family::Spider { n, model: false } => graph_report("spider", thick_spider(n).map_err(invalid)?),
        Family::RandomCa { n } => model_report("random-ca", random_ca_model(seed, n).map_err(invalid)?),
        Family::Interval { n } => model_report("interval", random_interval_model(seed, n).map_err(invalid)?),
        Family::Fixture { ref which } => {
            let which = SpiderFixture::from_name(which).ok_or_else(|| format!("unknown fixture {which}"))?;
            let m = spider_fixture(which);
            let target = thick_spider(which.spider_size()).map_err(invalid)?;
            let req = Requirements {
                max_bends: Some(which.bend_bound()),
                epr: which.is_epr(),
                nh: false,
            };
            let mut r = Report::new(json!({
                "family": "fixture",
                "fixture": which.name(),
                "format": "paths",
                "paths": m.len(),
                "max_bends": m.max_bends(),
            }));
            r.line(format!("{}: {} paths, max bends {}", which.name(), m.len(), m.max_bends()));
            r.absorb(None, &check_grid_model(&m, &target, req));
            r.artifact = Some(emit_paths(&m));
            r
        }
    })
}

/// One converted input: the model, or the reason it could not be built.
struct Converted {
    source: Input,
    graph: Graph,
    model: Result<GridModel, String>,
    extra: Value,
}

fn convert_one(to: Target, source: Input) -> Result<Converted, String> {
    let m = with_path(&source.path, parse_arcs(&source.text))?;
    let graph = m.intersection_graph();
    let (model, extra) = match to {
        Target::B3epg => (Ok(ca_to_b3_epg(&m)), Value::Null),
        Target::B4epr => {
            let e = ca_to_b4_epr(&m);
            (Ok(e.model), json!({ "corners": e.corners.iter().map(ToString::to_string).collect::<Vec<_>>() }))
        }
        Target::B2epr => match nca_to_b2_epr(&m) {
            Ok(e) => (Ok(e.model), json!({ "corners": e.corners.iter().map(ToString::to_string).collect::<Vec<_>>() })),
            Err(e) => (Err(e.to_string()), Value::Null),
        },
        Target::B1epr => match find_four_points(&m) {
            Some(fp) => {
                let e = nhca_to_b1_epr(&m, &fp).map_err(|e| e.to_string())?;
                (Ok(e.model), json!({ "four_points": points_json(&fp) }))
            }
            None => (Err("no four points in this model".to_owned()), Value::Null),
        },
    };
    Ok(Converted {
        source,
        graph,
        model,
        extra,
    })
}

fn requirements(to: Target) -> Requirements {
    match to {
        Target::B3epg => Requirements {
            max_bends: Some(3),
            ..Requirements::default()
        },
        Target::B4epr => Requirements {
            max_bends: Some(4),
            epr: true,
            nh: false,
        },
        Target::B2epr => Requirements {
            max_bends: Some(2),
            epr: true,
            nh: false,
        },
        Target::B1epr => Requirements {
            max_bends: Some(1),
            epr: true,
            nh: true,
        },
    }
}

fn target_name(to: Target) -> &'static str {
    match to {
        Target::B3epg => "b3epg",
        Target::B4epr => "b4epr",
        Target::B2epr => "b2epr",
        Target::B1epr => "b1epr",
    }
}

fn convert(to: Target, inputs: &[PathBuf], out_dir: Option<&Path>) -> Outcome {
    if inputs.len() > 1 && out_dir.is_none() {
        return Err("several inputs need --out-dir".to_owned());
    }
    let sources = inputs.iter().map(|p| read(p)).collect::<Result<Vec<_>, _>>()?;
    let batch = out_dir.is_some();

    // Each input is converted and written by its own thread.
    let converted: Vec<Result<(Converted, Option<PathBuf>), String>> = std::thread::scope(|s| {
        let handles: Vec<_> = sources
            .into_iter()
            .zip(inputs)
            .map(|(source, path)| {
                s.spawn(move || {
                    let c = convert_one(to, source)?;
                    let written = match (out_dir, &c.model) {
                        (Some(dir), Ok(model)) => {
                            let stem = path.file_stem().unwrap_or_default();
                            let dest = dir.join(stem).with_extension("paths");
                            std::fs::write(&dest, emit_paths(model)).map_err(|e| format!("{}: {e}", dest.display()))?;
                            Some(dest)
                        }
                        _ => None,
                    };
                    Ok((c, written))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("conversion thread panicked")).collect()
    });

    let mut report = Report::new(Value::Null);
    let mut results = Vec::new();
    for item in converted {
        let (c, written) = item?;
        report.input(&c.source);
        let prefix = batch.then_some(c.source.path.as_str());
        let mut entry = json!({ "input": c.source.path, "target": target_name(to) });
        match &c.model {
            Ok(model) => {
                report.absorb(prefix, &check_grid_model(model, &c.graph, requirements(to)));
                entry["paths"] = json!(model.len());
                entry["max_bends"] = json!(model.max_bends());
                if let Some(rect) = model.rect() {
                    entry["rect"] = json!([rect.r1, rect.r2, rect.c1, rect.c2]);
                }
                report.line(format!(
                    "{}: {} paths, max bends {}",
                    c.source.path,
                    model.len(),
                    model.max_bends()
                ));
                if !batch {
                    report.artifact = Some(emit_paths(model));
                }
            }
            Err(why) => {
                let name = match prefix {
                    Some(p) => format!("{p}: construction"),
                    None => "construction".to_owned(),
                };
                report.check(name, false, why.clone());
            }
        }
        if let Value::Object(extra) = &c.extra {
            for (k, v) in extra {
                entry[k] = v.clone();
            }
        }
        if let Some(dest) = written {
            entry["output"] = json!(dest.display().to_string());
        }
        results.push(entry);
    }
    report.result = if batch { json!(results) } else { results.pop().unwrap_or(Value::Null) };
    Ok(report)
}

fn analyze(input: Option<&Path>, criterion: Option<&[u64]>) -> Outcome {
    let mut report = Report::new(json!({}));
    if let Some(path) = input {
        let source = read(path)?;
        let m = with_path(&source.path, parse_arcs(&source.text))?;
        report.input(&source);
        let g = m.intersection_graph();
        let fp = find_four_points(&m);
        let uncovered = m.first_uncovered_gap().map(|p| p.to_string());
        report.result["model"] = json!({
            "arcs": m.n(),
            "graph": graph_summary(&g),
            "normal": m.is_normal(),
            "normal_helly": m.is_normal_helly(),
            "chordal": is_chordal(&g),
            "uncovered_gap": uncovered,
            "four_points": fp.as_ref().map(points_json),
        });
        report.line(format!("arcs: {}", m.n()));
        report.line(format!("normal: {}", m.is_normal()));
        report.line(format!("normal helly: {}", m.is_normal_helly()));
        report.line(format!("chordal: {}", is_chordal(&g)));
        report.line(format!(
            "four points: {}",
            fp.map_or("none".to_owned(), |fp| fp.points().map(|p| p.to_string()).join(" "))
        ));
    }
    if let Some(&[n, k, t]) = criterion {
        let contains = cycle_power_contains_criterion(n, k, t).map_err(|e| e.to_string())?;
        report.result["criterion"] = json!({ "n": n, "k": k, "t": t, "contains": contains });
        report.line(format!("C_{n}^{k} contains C_{}^{t}: {contains}", 4 * t - 1));
    }
    Ok(report)
}

fn decide(path: &Path) -> Outcome {
    let source = read(path)?;
    let m = with_path(&source.path, parse_arcs(&source.text))?;
    let g = m.intersection_graph();
    let d = decide_b1_epr(&m);
    let mut report = Report::new(Value::Null);
    report.input(&source);
    report.result = match &d {
        B1Decision::Yes { four_points, .. } => json!({ "verdict": "yes", "four_points": points_json(four_points) }),
        B1Decision::YesInterval { .. } => json!({ "verdict": "yes-interval" }),
        B1Decision::No {
            reason,
            chordal,
            obstruction,
        } => json!({
            "verdict": "no",
            "reason": reason.name(),
            "chordal": chordal,
            "obstruction": obstruction.map(|t| json!({ "t": t, "cycle_power": [4 * t - 1, t] })),
            "model_relative": matches!(reason, arcgrid::recognition::NoReason::NotNhModel),
        }),
    };
    report.line(format!("verdict: {}", report.result["verdict"].as_str().unwrap_or("")));
    if let B1Decision::No { reason, obstruction, .. } = &d {
        report.line(format!("reason: {}", reason.name()));
        if let Some(t) = obstruction {
            report.line(format!("obstruction: induced C_{}^{t}", 4 * t - 1));
        }
        if matches!(reason, arcgrid::recognition::NoReason::NotNhModel) {
            report.line("note: the verdict concerns this model; another model of the graph may be normal Helly");
        }
    }
    if let Some(model) = d.model() {
        let req = Requirements {
            max_bends: Some(if matches!(d, B1Decision::Yes { .. }) { 1 } else { 0 }),
            epr: true,
            nh: matches!(d, B1Decision::Yes { .. }),
        };
        report.absorb(None, &check_grid_model(model, &g, req));
        report.artifact = Some(emit_paths(model));
    }
    Ok(report)
}

fn subgraph(path: &Path, target: &[String]) -> Outcome {
    let [family, n, k] = target else {
        return Err("--target takes FAMILY N K".to_owned());
    };
    if family != "cycle-power" {
        return Err(format!("unknown target family {family}"));
    }
    let parse = |s: &str| s.parse::<usize>().map_err(|_| format!("not a count: {s}"));
    let (n, k) = (parse(n)?, parse(k)?);
    let h = cycle_power(n, k).map_err(|e| e.to_string())?;
    let source = read(path)?;
    let g = graph_of(&source)?;
    let mut report = Report::new(Value::Null);
    report.input(&source);
    let found = find_induced(&g, &h);
    let embedding: Option<serde_json::Map<String, Value>> = found.as_ref().map(|map| {
        map.iter()
            .enumerate()
            .map(|(u, &v)| (h.id(u).to_owned(), json!(g.id(v))))
            .collect()
    });
    if let Some(map) = &found {
        let induced = (0..h.order()).all(|u| (u + 1..h.order()).all(|v| h.has_edge(u, v) == g.has_edge(map[u], map[v])));
        report.check("embedding-induced", induced, format!("{} vertices mapped", map.len()));
    }
    report.line(format!("contains induced C_{n}^{k}: {}", found.is_some()));
    report.result = json!({
        "target": { "family": family, "n": n, "k": k },
        "contains": found.is_some(),
        "embedding": embedding,
    });
    Ok(report)
}

fn verify(paths: &Path, against: &Path, req: Requirements) -> Outcome {
    let p = read(paths)?;
    let model = with_path(&p.path, parse_paths(&p.text))?;
    let a = read(against)?;
    let target = graph_of(&a)?;
    let mut report = Report::new(json!({ "paths": model.len(), "max_bends": model.max_bends() }));
    report.input(&p);
    report.input(&a);
    report.absorb(None, &check_grid_model(&model, &target, req));
    Ok(report)
}

fn render(path: &Path, svg: bool) -> Outcome {
    let source = read(path)?;
    let model = with_path(&source.path, parse_paths(&source.text))?;
    let mut report = Report::new(json!({ "style": if svg { "svg" } else { "ascii" }, "paths": model.len() }));
    report.input(&source);
    report.artifact = Some(if svg { render_svg(&model) } else { render_ascii(&model) });
    Ok(report)
}
