use std::fmt::Write as _;
use std::str::FromStr;

use ordseq_core::expr::build_group;
use ordseq_core::graphs::{directed_power_graph, gk_graph, power_graph};
use ordseq_core::group::{catalog, is_nilpotent, FiniteGroup};
use ordseq_core::partition::{
    abelian_order_sequence, box_move_chain, cyclic_subgroup_counts, defining_partition, majorizes, partitions_of,
    Partition,
};
use ordseq_core::poset::{build_poset, hasse, render, RenderFormat};
use ordseq_core::sequence::{
    dominates, order_sequence, plausible, psi, psi_k, realize, rho, strong_domination_certificate, BigCount,
    OrderSequence,
};
use ordseq_theorems::{Suite, SuiteOptions, SuiteReport};
use serde_json::json;

use crate::fail::{Failure, USAGE, VERIFY_FAILED};
use crate::{Cli, Command, GraphKind, PartitionOp};

/// Most digits of ρ printed in full in text output.
const MAX_EXACT_DIGITS: usize = 120;

type Outcome = Result<(String, u8), Failure>;

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Os { expr } => os(cli, expr),
        Command::Compare { a, b } => compare(cli, a, b),
        Command::Poset { order, dot } => poset(cli, *order, *dot),
        Command::Verify { all, suite, stretch, order, prime } => {
            verify(cli, *all, suite, *stretch, SuiteOptions { order: *order, prime: *prime, seed: cli.seed })
        }
        Command::Realize { sequence, order } => realize_cmd(cli, sequence, *order),
        Command::Graph { kind, expr } => graph(cli, *kind, expr),
        Command::Partition { op } => partition(cli, op),
    }
    .map(|(mut text, code)| {
        if !text.ends_with('\n') {
            text.push('\n');
        }
        (text, code)
    })
}

fn ok(text: String) -> Outcome {
    Ok((text, 0))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn group(cli: &Cli, expr: &str) -> Result<FiniteGroup, Failure> {
    Ok(build_group(expr, cli.max_size)?)
}

fn seq_json(s: &OrderSequence) -> serde_json::Value {
    serde_json::to_value(s).expect("sequence serializes")
}

/// Exact below the digit cap, otherwise `d.ddd...e<exponent>`.
fn big(n: &BigCount) -> String {
    let digits = n.to_string();
    if digits.len() <= MAX_EXACT_DIGITS {
        return digits;
    }
    format!("{}.{}e{}", &digits[..1], &digits[1..20], digits.len() - 1)
}

fn os(cli: &Cli, expr: &str) -> Outcome {
    let g = group(cli, expr)?;
    let s = order_sequence(&g);
    let n = s.len();
    let (p1, p2, r) = (psi(&s), psi_k(&s, 2), rho(&s));
    let nilpotent = is_nilpotent(&g);
    if cli.json {
        return ok(pretty(&json!({
            "group": g.name(),
            "order": n,
            "sequence": seq_json(&s),
            "psi": p1.to_string(),
            "psi2": p2.to_string(),
            "rho": r.to_string(),
            "exponent": g.exponent(),
            "nilpotent": nilpotent,
        })));
    }
    let mut out = format!("{s}  psi={p1} rho={}\n", big(&r));
    let _ = writeln!(out, "order={n} psi2={p2} exponent={} nilpotent={}", g.exponent(), yes_no(nilpotent));
    ok(out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn compare(cli: &Cli, a: &str, b: &str) -> Outcome {
    let (sa, sb) = (order_sequence(&group(cli, a)?), order_sequence(&group(cli, b)?));
    let ab = dominates(&sa, &sb)?;
    let ba = dominates(&sb, &sa)?;
    let (relation, cert) = match (ab, ba) {
        (true, true) => ("A=B", Some(None)),
        (true, false) => ("A>B", Some(strong_domination_certificate(&sa, &sb)?)),
        (false, true) => ("B>A", Some(strong_domination_certificate(&sb, &sa)?)),
        (false, false) => ("incomparable", None),
    };
    if cli.json {
        return ok(pretty(&json!({
            "a": seq_json(&sa),
            "b": seq_json(&sb),
            "relation": relation,
            "strong": cert.as_ref().map(|c| c.is_none()),
            "certificate": cert.flatten(),
        })));
    }
    let mut out = String::from(relation);
    match cert {
        Some(None) => out.push_str(" strong\n"),
        Some(Some(c)) => {
            let _ = write!(out, " not-strong\ncertificate: {c}\n");
        }
        None => out.push('\n'),
    }
    ok(out)
}

fn poset(cli: &Cli, order: u64, dot: bool) -> Outcome {
    let items: Vec<(String, OrderSequence)> =
        catalog(order)?.into_iter().map(|e| (e.name, order_sequence(&e.group))).collect();
    let p = build_poset(&items, |x, y| dominates(y, x).unwrap_or(false), true)
        .map_err(|e| Failure::new(USAGE, e.to_string()))?;
    let format = if cli.json && !dot { RenderFormat::Json } else { RenderFormat::Dot };
    ok(render(&hasse(&p), format))
}

fn verify(cli: &Cli, all: bool, names: &[String], stretch: bool, opts: SuiteOptions) -> Outcome {
    let mut suites = Vec::new();
    for name in names {
        let s = Suite::from_str(name)?;
        if !suites.contains(&s) {
            suites.push(s);
        }
    }
    for s in Suite::ALL {
        if ((all && !s.is_stretch()) || (stretch && s.is_stretch())) && !suites.contains(&s) {
            suites.push(s);
        }
    }
    let reports: Vec<SuiteReport> = suites.iter().map(|s| s.run(&opts)).collect();
    let failed = reports.iter().filter(|r| !r.passed).count();
    let code = if failed == 0 { 0 } else { VERIFY_FAILED };
    if cli.json {
        return Ok((serde_json::to_string_pretty(&reports).expect("reports serialize"), code));
    }
    let mut out = String::new();
    for r in &reports {
        out.push_str(&r.to_string());
    }
    let _ = writeln!(out, "{} suites, {failed} failed", reports.len());
    Ok((out, code))
}

fn realize_cmd(cli: &Cli, text: &str, order: u64) -> Outcome {
    let s: OrderSequence = text.parse()?;
    let violation = plausible(&s, order);
    let names = realize(&s, order)?;
    if cli.json {
        return ok(pretty(&json!({
            "sequence": seq_json(&s),
            "order": order,
            "plausible": violation.is_none(),
            "violation": violation,
            "groups": names,
        })));
    }
    let mut out = String::new();
    match violation {
        Some(v) => {
            let _ = writeln!(out, "implausible: rule {} ({v})", v.rule());
        }
        None if names.is_empty() => out.push_str("plausible, no catalog group\n"),
        None => {
            out.push_str("plausible\n");
            for name in names {
                let _ = writeln!(out, "{name}");
            }
        }
    }
    ok(out)
}

fn graph(cli: &Cli, kind: GraphKind, expr: &str) -> Outcome {
    let g = group(cli, expr)?;
    let graph = match kind {
        GraphKind::Power => power_graph(&g)?,
        GraphKind::Dpower => directed_power_graph(&g)?,
        GraphKind::Gk => gk_graph(&g),
    };
    if cli.json {
        return ok(graph.to_json());
    }
    ok(graph.to_dot(g.name()))
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    Ok(text.parse()?)
}

fn partition(cli: &Cli, op: &PartitionOp) -> Outcome {
    match op {
        PartitionOp::Counts { p, partition } => {
            let a = parse_partition(partition)?;
            let counts = cyclic_subgroup_counts(*p, &a)?;
            if cli.json {
                return ok(serde_json::to_string_pretty(&counts).expect("counts serialize"));
            }
            let mut out = String::from("order\telements\tcyclic_subgroups\n");
            for c in &counts.per_order {
                let _ = writeln!(out, "{}\t{}\t{}", c.order, c.elements, c.cyclic_subgroups);
            }
            let _ = writeln!(out, "total\t\t{}", counts.total);
            ok(out)
        }
        PartitionOp::Sequence { p, partition } => {
            let s = abelian_order_sequence(*p, &parse_partition(partition)?)?;
            ok(if cli.json { s.to_json() } else { s.to_string() })
        }
        PartitionOp::Identify { sequence, p } => {
            let s: OrderSequence = sequence.parse()?;
            let a = defining_partition(&s, *p)?;
            ok(if cli.json { json!(a).to_string() } else { a.to_string() })
        }
        PartitionOp::Conjugate { partition } => {
            let c = parse_partition(partition)?.conjugate();
            ok(if cli.json { json!(c).to_string() } else { c.to_string() })
        }
        PartitionOp::Compare { a, c } => {
            let (a, c) = (parse_partition(a)?, parse_partition(c)?);
            let relation = match (majorizes(&a, &c)?, majorizes(&c, &a)?) {
                (true, true) => "A=C",
                (true, false) => "A>C",
                (false, true) => "C>A",
                (false, false) => "incomparable",
            };
            ok(if cli.json { json!({ "relation": relation }).to_string() } else { relation.to_string() })
        }
        PartitionOp::Chain { a, c } => {
            let chain = box_move_chain(&parse_partition(a)?, &parse_partition(c)?)?;
            if cli.json {
                return ok(json!(chain).to_string());
            }
            let steps: Vec<String> = chain.iter().map(Partition::to_string).collect();
            ok(steps.join(" -> "))
        }
        PartitionOp::List { n } => {
            let parts = partitions_of(*n)?;
            if cli.json {
                let rows: Vec<_> = parts
                    .iter()
                    .map(|a| json!({ "partition": a, "conjugate": a.conjugate(), "divisor_product": a.divisor_product() }))
                    .collect();
                return ok(pretty(&json!(rows)));
            }
            let mut out = String::from("partition\tconjugate\tdivisor_product\n");
            for a in parts {
                let _ = writeln!(out, "{a}\t{}\t{}", a.conjugate(), a.divisor_product());
            }
            ok(out)
        }
    }
}
