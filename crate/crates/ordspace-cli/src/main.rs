//! Command-line surface for the ordspace library.
//!
//! Every command prints one JSON record per result line on standard
//! output. Exit code 0 means success, 1 a domain error (impossible
//! request on valid input), 2 a usage or syntax error.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ordspace::classify::{
    count_c_orderings, count_left_orderings, enum_orderings, series_of_group, verdict,
    OrderClass, OrderCount, SeriesDescriptor,
};
use ordspace::dynreal::{check_realization, realize_ball};
use ordspace::error::{Error, Result};
use ordspace::exact::{Rational, Side};
use ordspace::groups::{Ball, Elem, Group};
use ordspace::orders::{
    check_cofinal, check_cone_axioms, check_conradian, ConeViolation, OrderingOracle, Sign,
};
use ordspace::space::{
    agreement_radius, converge_experiment, probe_neighborhood, AgreementResult, ProbeOutcome,
};

use num_bigint::BigInt;

#[derive(Parser)]
#[command(
    name = "ordspace",
    version,
    about = "Exact computations with left-orderings on groups with a finite rational series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Left,
    Conradian,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Above,
    Below,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Above => Side::Above,
            SideArg::Below => Side::Below,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Normal-form coordinates of a word
    Nf {
        #[arg(long)]
        group: String,
        #[arg(long)]
        word: String,
    },
    /// Compare two words under an ordering
    Cmp {
        #[arg(long)]
        group: String,
        #[arg(long)]
        order: String,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Sign of a word under an ordering
    Sign {
        #[arg(long)]
        group: String,
        #[arg(long)]
        order: String,
        #[arg(long)]
        word: String,
    },
    /// List the Cayley ball, one element per line
    Ball {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 5)]
        radius: u32,
    },
    /// Enumerate the finite ordering family of a group
    Enum {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Certify the positive-cone axioms over a ball
    Check {
        #[arg(long)]
        group: String,
        #[arg(long)]
        order: String,
        #[arg(long, default_value_t = 5)]
        radius: u32,
    },
    /// Test the Conradian law over all pairs of ball positives
    Conradian {
        #[arg(long)]
        group: String,
        #[arg(long)]
        order: String,
        #[arg(long, default_value_t = 5)]
        radius: u32,
    },
    /// Bound every ball element by powers of a candidate cofinal element
    Cofinal {
        #[arg(long)]
        group: String,
        #[arg(long)]
        order: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 5)]
        radius: u32,
        #[arg(long, default_value_t = 64)]
        exp_bound: u64,
    },
    /// Ultrametric distance between two orderings
    Dist {
        #[arg(long)]
        group: String,
        #[arg(long)]
        o1: String,
        #[arg(long)]
        o2: String,
        #[arg(long, default_value_t = 8)]
        max_radius: u32,
    },
    /// Agreement radii of basepoint orderings marching toward an ordering
    Converge {
        #[arg(long)]
        group: String,
        #[arg(long)]
        order: String,
        #[arg(long, value_enum, default_value = "above")]
        side: SideArg,
        #[arg(long, default_value = "2")]
        start: String,
        #[arg(long, default_value_t = 10)]
        points: u32,
        #[arg(long, default_value_t = 8)]
        max_radius: u32,
    },
    /// Search for a nearby ordering keeping pinned elements positive
    Probe {
        #[arg(long)]
        group: String,
        #[arg(long)]
        order: String,
        #[arg(long = "pin")]
        pins: Vec<String>,
    },
    /// Dynamical realization of an ordering over a ball enumeration
    Dynreal {
        #[arg(long)]
        group: String,
        #[arg(long)]
        order: String,
        #[arg(long, default_value_t = 5)]
        radius: u32,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Count orderings and classify a rational-series descriptor
    Classify {
        #[arg(long, required_unless_present = "group", conflicts_with = "group")]
        series: Option<String>,
        #[arg(long)]
        group: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(if e.is_syntax() { 2 } else { 1 });
    }
}

/// Re-tags syntax errors with the flag that carried the bad text.
fn flagged<T>(flag: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| {
        if e.is_syntax() {
            let msg = match &e {
                Error::Descriptor(m) => m.clone(),
                other => other.to_string(),
            };
            Error::Descriptor(format!("{flag}: {msg}"))
        } else {
            e
        }
    })
}

fn parse_group(text: &str) -> Result<Group> {
    flagged("--group", Group::from_json(text))
}

fn parse_order(flag: &str, group: &Group, text: &str) -> Result<OrderingOracle> {
    flagged(flag, OrderingOracle::from_json(group, text))
}

fn parse_word(flag: &str, group: &Group, text: &str) -> Result<Elem> {
    flagged(flag, group.eval_text(text))
}

fn big_json(b: &BigInt) -> Value {
    match i64::try_from(b) {
        Ok(n) => Value::from(n),
        Err(_) => Value::from(b.to_string()),
    }
}

fn rat_json(r: &Rational) -> Value {
    Value::from(r.to_string())
}

fn count_json(c: &OrderCount) -> Value {
    match c {
        OrderCount::Finite(n) => big_json(n),
        OrderCount::Infinite => Value::from("infinite"),
    }
}

fn nf_json(elem: &Elem) -> Value {
    match elem {
        Elem::F1 { k, s } => json!({ "k": big_json(k), "s": rat_json(s) }),
        Elem::B13(q) => json!({ "k": big_json(q.k()), "s": rat_json(q.shift()) }),
        Elem::Gn { s, q } => json!({
            "s": rat_json(s),
            "q": { "k": big_json(q.k()), "s": rat_json(q.shift()) },
        }),
        Elem::Tower(e) => json!({ "e": e.iter().map(big_json).collect::<Vec<_>>() }),
        Elem::RankOne(s) => json!({ "s": rat_json(s) }),
    }
}

fn word_str(group: &Group, elem: &Elem) -> Result<String> {
    Ok(group.normal_form(elem)?.to_string())
}

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Negative => "negative",
        Sign::Zero => "zero",
        Sign::Positive => "positive",
    }
}

fn dist_json(result: &AgreementResult, extra: &[(&str, Value)]) -> Value {
    let mut record = serde_json::Map::new();
    for (key, value) in extra {
        record.insert((*key).to_string(), value.clone());
    }
    match result.radius() {
        Some(radius) => {
            record.insert("agreement_radius".into(), Value::from(radius));
            record.insert(
                "dist".into(),
                rat_json(&result.dist().expect("separated results have a distance")),
            );
        }
        None => {
            record.insert("agreement_radius".into(), Value::Null);
            record.insert("dist_at_most".into(), rat_json(&result.dist_bound()));
        }
    }
    Value::Object(record)
}

fn oracle_json(oracle: &OrderingOracle) -> Value {
    serde_json::from_str(&oracle.descriptor_json()).expect("descriptors are valid JSON")
}

fn emit(value: Value) {
    println!("{value}");
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Nf { group, word } => {
            let group = parse_group(&group)?;
            let elem = parse_word("--word", &group, &word)?;
            emit(nf_json(&elem));
        }
        Command::Cmp {
            group,
            order,
            lhs,
            rhs,
        } => {
            let group = parse_group(&group)?;
            let oracle = parse_order("--order", &group, &order)?;
            let lhs = parse_word("--lhs", &group, &lhs)?;
            let rhs = parse_word("--rhs", &group, &rhs)?;
            let verdict = match oracle.compare(&lhs, &rhs)? {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            emit(json!({ "cmp": verdict }));
        }
        Command::Sign { group, order, word } => {
            let group = parse_group(&group)?;
            let oracle = parse_order("--order", &group, &order)?;
            let elem = parse_word("--word", &group, &word)?;
            emit(json!({ "sign": sign_str(oracle.sign(&elem)?) }));
        }
        Command::Ball { group, radius } => {
            let group = parse_group(&group)?;
            let ball = Ball::new(&group, radius)?;
            for (index, entry) in ball.iter().enumerate() {
                emit(json!({
                    "index": index,
                    "len": entry.len,
                    "word": entry.word.to_string(),
                    "nf": word_str(&group, &entry.elem)?,
                }));
            }
        }
        Command::Enum { group, kind } => {
            let group = parse_group(&group)?;
            let class = match kind {
                KindArg::Left => OrderClass::Left,
                KindArg::Conradian => OrderClass::Conradian,
            };
            for oracle in enum_orderings(&group, class)? {
                println!("{}", oracle.descriptor_json());
            }
        }
        Command::Check {
            group,
            order,
            radius,
        } => {
            let group = parse_group(&group)?;
            let oracle = parse_order("--order", &group, &order)?;
            let report = check_cone_axioms(&oracle, radius)?;
            let violation = match &report.violation {
                None => Value::Null,
                Some(ConeViolation::IdentitySigned { sign }) => {
                    Value::from(format!("identity has sign {}", sign_str(*sign)))
                }
                Some(ConeViolation::Unsigned { x }) => {
                    Value::from(format!("no sign: {}", word_str(&group, x)?))
                }
                Some(ConeViolation::Antisymmetry { x }) => Value::from(format!(
                    "inverse does not flip the sign: {}",
                    word_str(&group, x)?
                )),
                Some(ConeViolation::ProductLeak { x, y }) => Value::from(format!(
                    "positives leak: ({}) ({})",
                    word_str(&group, x)?,
                    word_str(&group, y)?
                )),
            };
            emit(json!({
                "holds": report.holds(),
                "radius": report.radius,
                "elements": report.elements,
                "pairs_checked": report.pairs_checked,
                "violation": violation,
            }));
        }
        Command::Conradian {
            group,
            order,
            radius,
        } => {
            let group = parse_group(&group)?;
            let oracle = parse_order("--order", &group, &order)?;
            let report = check_conradian(&oracle, radius)?;
            let first = match report.violations.first() {
                None => Value::Null,
                Some(v) => json!({
                    "f": word_str(&group, &v.f)?,
                    "g": word_str(&group, &v.g)?,
                    "combo": word_str(&group, &v.combo)?,
                    "sign": sign_str(v.sign),
                }),
            };
            emit(json!({
                "holds": report.holds(),
                "radius": report.radius,
                "positives": report.positives,
                "pairs_checked": report.pairs_checked,
                "violations": report.violations.len(),
                "first": first,
            }));
        }
        Command::Cofinal {
            group,
            order,
            word,
            radius,
            exp_bound,
        } => {
            let group = parse_group(&group)?;
            let oracle = parse_order("--order", &group, &order)?;
            let c = parse_word("--word", &group, &word)?;
            let report = check_cofinal(&oracle, &c, radius, exp_bound)?;
            let first_unbounded = match report.first_unbounded() {
                None => Value::Null,
                Some(e) => Value::from(word_str(&group, e)?),
            };
            emit(json!({
                "all_bounded": report.all_bounded(),
                "bound": report.bound,
                "radius": report.radius,
                "max_exponent": report.max_exponent(),
                "first_unbounded": first_unbounded,
            }));
        }
        Command::Dist {
            group,
            o1,
            o2,
            max_radius,
        } => {
            let group = parse_group(&group)?;
            let left = parse_order("--o1", &group, &o1)?;
            let right = parse_order("--o2", &group, &o2)?;
            let result = agreement_radius(&left, &right, max_radius)?;
            let mut extra = Vec::new();
            if let Some(witness) = match &result.outcome {
                ordspace::space::AgreementOutcome::Separated { word, .. } => {
                    Some(word.to_string())
                }
                ordspace::space::AgreementOutcome::Agree => None,
            } {
                extra.push(("witness", Value::from(witness)));
            }
            emit(dist_json(&result, &extra));
        }
        Command::Converge {
            group,
            order,
            side,
            start,
            points,
            max_radius,
        } => {
            let group = parse_group(&group)?;
            let oracle = parse_order("--order", &group, &order)?;
            let start: Rational = flagged("--start", start.parse())?;
            let table = converge_experiment(&oracle, side.into(), &start, points, max_radius)?;
            for point in table {
                let (value, side) = match &point.eps {
                    ordspace::exact::OrderParam::Finite { value, side } => (
                        rat_json(value),
                        match side {
                            Side::Above => "above",
                            Side::Below => "below",
                        },
                    ),
                    _ => unreachable!("experiment basepoints are finite"),
                };
                let extra = [("eps", value), ("side", Value::from(side))];
                emit(dist_json(&point.agreement, &extra));
            }
        }
        Command::Probe { group, order, pins } => {
            let group = parse_group(&group)?;
            let oracle = parse_order("--order", &group, &order)?;
            let mut elems = Vec::with_capacity(pins.len());
            for pin in &pins {
                elems.push(parse_word("--pin", &group, pin)?);
            }
            match probe_neighborhood(&oracle, &elems)? {
                ProbeOutcome::Neighbor(n) => emit(json!({
                    "outcome": "neighbor",
                    "oracle": oracle_json(&n.oracle),
                    "witness": n.witness_word.to_string(),
                    "sign_before": sign_str(n.sign_before),
                    "sign_after": sign_str(n.sign_after),
                })),
                ProbeOutcome::Isolated(report) => {
                    let mut siblings = Vec::new();
                    for s in &report.siblings {
                        let conflict = match &s.conflict {
                            None => Value::Null,
                            Some(e) => Value::from(word_str(&group, e)?),
                        };
                        siblings.push(json!({
                            "oracle": oracle_json(&s.oracle),
                            "conflict": conflict,
                        }));
                    }
                    emit(json!({
                        "outcome": "isolated",
                        "family": report
                            .family
                            .iter()
                            .map(oracle_json)
                            .collect::<Vec<_>>(),
                        "siblings": siblings,
                    }));
                }
            }
        }
        Command::Dynreal {
            group,
            order,
            radius,
            limit,
        } => {
            let group = parse_group(&group)?;
            let oracle = parse_order("--order", &group, &order)?;
            let map = realize_ball(&oracle, radius, limit)?;
            for entry in map.entries() {
                emit(json!({
                    "word": word_str(&group, &entry.elem)?,
                    "coord": rat_json(&entry.coord),
                }));
            }
            let report = check_realization(&map, &oracle)?;
            let order_violation = match &report.order_violation {
                None => Value::Null,
                Some((x, y)) => {
                    json!([word_str(&group, x)?, word_str(&group, y)?])
                }
            };
            let action_violation = match &report.action_violation {
                None => Value::Null,
                Some(v) => json!({
                    "g": word_str(&group, &v.g)?,
                    "lower": word_str(&group, &v.lower)?,
                    "upper": word_str(&group, &v.upper)?,
                }),
            };
            let sign_violation = match &report.sign_violation {
                None => Value::Null,
                Some(e) => Value::from(word_str(&group, e)?),
            };
            emit(json!({
                "holds": report.holds(),
                "points": report.points,
                "order_pairs": report.order_pairs,
                "action_pairs": report.action_pairs,
                "order_violation": order_violation,
                "action_violation": action_violation,
                "sign_violation": sign_violation,
            }));
        }
        Command::Classify { series, group } => {
            let descriptor = match (series, group) {
                (Some(text), None) => flagged("--series", SeriesDescriptor::from_json(&text))?,
                (None, Some(text)) => series_of_group(&parse_group(&text)?),
                _ => unreachable!("clap enforces exactly one source"),
            };
            emit(json!({
                "c_count": count_json(&count_c_orderings(&descriptor)?),
                "lo_count": count_json(&count_left_orderings(&descriptor)?),
                "verdict": verdict(&descriptor)?.to_string(),
            }));
        }
    }
    Ok(())
}
