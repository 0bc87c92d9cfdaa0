//! The `gpd` command line: reads the JSON interchange formats, runs the
//! constructions and decision procedures of `gpd-core`, and prints one JSON
//! report per invocation.
//!
//! Exit codes: 0 for a true verdict or a finished construction, 1 for a
//! false verdict, 2 for unreadable input, failed validation or an exceeded
//! size bound. Error reports carry a `witnesses` field pointing at the
//! offending ids, JSON position or bound.

mod input;
mod report;

use std::io::Read;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gpd_core::format::{bibundle_json, fraction_json, group_json, groupoid_json, map_json, natiso_json, rep_json, Decoder};
use gpd_core::*;
use serde_json::{json, Value};

use input::{parse, Inputs};
pub use report::{EXIT_ERROR, EXIT_FALSE, EXIT_TRUE};
use report::{failure_json, report_json, Failure, Report};

/// Default apex bound for the brute-force span search.
pub const DEFAULT_ORACLE_BOUND: usize = 6;
/// Environment variable overriding [`DEFAULT_ORACLE_BOUND`].
pub const ORACLE_BOUND_VAR: &str = "GPD_ORACLE_BOUND";
/// Largest composition table (composable pairs) `build` will tabulate.
pub const BUILD_TABLE_BOUND: usize = 16_000_000;

#[derive(Parser)]
#[command(name = "gpd", version, about = "Finite groupoids, their generalized maps and Morita equivalence")]
struct Cli {
    /// Print a one-line summary followed by indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a file and print it in canonical form.
    Validate(ValidateArgs),
    /// Build a groupoid.
    #[command(subcommand)]
    Build(Build),
    /// Orbits, isotropy groups and anchor fibre sizes.
    Analyze { groupoid: String },
    /// Is the map a weak equivalence?
    Weq { map: String },
    /// Is the map a weak equivalence, decided on orbits and isotropy?
    Charequi { map: String },
    /// Are two groupoids Morita equivalent?
    Morita {
        a: String,
        b: String,
        /// Also run the span search with this apex bound (default from
        /// GPD_ORACLE_BOUND, else 6).
        #[arg(long, num_args = 0..=1, value_name = "BOUND")]
        oracle: Option<Option<usize>>,
    },
    /// Fractions (generalized maps).
    #[command(subcommand)]
    Frac(Frac),
    /// Bibundles.
    #[command(subcommand)]
    Bib(Bib),
    /// Representations over the rationals.
    #[command(subcommand)]
    Rep(Rep),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Groupoid,
    Group,
    Map,
    Natiso,
    Fraction,
    Bibundle,
    Rep,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Groupoid => "groupoid",
            Kind::Group => "group",
            Kind::Map => "map",
            Kind::Natiso => "natiso",
            Kind::Fraction => "fraction",
            Kind::Bibundle => "bibundle",
            Kind::Rep => "rep",
        }
    }

    fn detect(v: &Value) -> Option<Kind> {
        let has = |k: &str| v.get(k).is_some();
        [
            ("n_objects", Kind::Groupoid),
            ("table", Kind::Group),
            ("on_objects", Kind::Map),
            ("alpha", Kind::Natiso),
            ("apex", Kind::Fraction),
            ("carrier", Kind::Bibundle),
            ("dims", Kind::Rep),
        ]
        .into_iter()
        .find(|(k, _)| has(k))
        .map(|(_, kind)| kind)
    }
}

#[derive(Args)]
struct ValidateArgs {
    input: String,
    /// What the input holds; detected from its keys when omitted.
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    /// The groupoid a representation lives on.
    #[arg(long)]
    groupoid: Option<String>,
    /// Source map of a natural isomorphism.
    #[arg(long)]
    from: Option<String>,
    /// Target map of a natural isomorphism.
    #[arg(long)]
    to: Option<String>,
}

#[derive(Subcommand)]
enum Build {
    /// n objects, units only.
    Unit {
        #[arg(long)]
        n: usize,
    },
    /// n objects, one arrow between any two.
    Pair {
        #[arg(long)]
        n: usize,
    },
    /// A group as a one-object groupoid.
    Group {
        /// `trivial`, `cyclic:n`, `symmetric:n`, `dihedral:n`, or a table.
        #[arg(long)]
        group: String,
    },
    /// The action groupoid of a group acting on points.
    Action {
        #[arg(long)]
        group: String,
        /// `action[g][x]` as JSON, or `natural`, `regular`, `trivial:n`.
        #[arg(long)]
        action: String,
    },
    /// The kernel pair of a map of finite sets, given as a JSON list.
    KernelPair {
        #[arg(long)]
        map: String,
    },
    /// The Čech groupoid of a cover of 0..points.
    Cech {
        #[arg(long)]
        points: usize,
        /// JSON list of charts.
        #[arg(long)]
        cover: String,
    },
    /// The gauge groupoid of a free group action.
    Gauge {
        #[arg(long)]
        group: String,
        #[arg(long)]
        action: String,
    },
    /// The arrow groupoid.
    Arrow { groupoid: String },
    /// The full subgroupoid on a set of objects.
    Restrict {
        groupoid: String,
        /// JSON list of objects.
        #[arg(long)]
        objects: String,
    },
}

#[derive(Subcommand)]
enum Frac {
    /// Do two fractions present the same generalized map?
    Eq {
        a: String,
        b: String,
        #[arg(long, num_args = 0..=1, value_name = "BOUND")]
        oracle: Option<Option<usize>>,
    },
    /// The composite: first `a`, then `b`.
    Compose { a: String, b: String },
    /// The inverse of a fraction whose right leg is a weak equivalence.
    Invert { fraction: String },
    /// Refine over a cover of the source (canonical cover by default).
    Refine {
        fraction: String,
        /// JSON list of charts.
        #[arg(long)]
        cover: Option<String>,
    },
}

#[derive(Subcommand)]
enum Bib {
    /// The fraction of a right principal bibundle.
    Tofrac { bibundle: String },
    /// The bibundle of a fraction.
    Fromfrac { fraction: String },
    /// Round trip through the other side: a bibundle comes back isomorphic,
    /// a fraction comes back equal.
    Roundtrip { input: String },
    /// The gauge groupoid of a biprincipal bibundle and its isomorphism onto
    /// the right groupoid.
    Gauge { bibundle: String },
}

#[derive(Subcommand)]
enum Rep {
    /// Check the unit and composition laws of a representation.
    Validate { groupoid: String, rep: String },
    /// Pull a representation of the codomain back along a map.
    Pullback { map: String, rep: String },
    /// The direct sum of two representations.
    Sum { groupoid: String, a: String, b: String },
    /// Are two representations isomorphic? Emits an intertwiner if so.
    Iso { groupoid: String, a: String, b: String },
}

/// Runs one invocation; `args` excludes the program name. Returns the exit
/// code and everything meant for standard output.
pub fn run<S: AsRef<str>>(args: &[S], stdin: &mut dyn Read) -> (i32, String) {
    let argv = std::iter::once("gpd").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (EXIT_TRUE, e.render().to_string());
            }
            let f = Failure::usage(e.render().to_string().trim_end());
            let pretty = args.iter().any(|a| a.as_ref() == "--pretty");
            return (EXIT_ERROR, render("usage", failure_json("usage", &f), pretty));
        }
    };
    let name = command_name(&cli.command);
    let inputs = Inputs::new(stdin);
    let (code, v) = match dispatch(&cli.command, &inputs) {
        Ok(r) => (r.code, report_json(&name, r)),
        Err(f) => (EXIT_ERROR, failure_json(&name, &f)),
    };
    (code, render(&name, v, cli.pretty))
}

fn render(name: &str, v: Value, pretty: bool) -> String {
    if !pretty {
        return format!("{v}\n");
    }
    let summary = if let Some(e) = v.get("error") {
        format!("{name}: error ({}): {}", e["kind"].as_str().unwrap_or(""), e["message"].as_str().unwrap_or(""))
    } else {
        let verdicts: Vec<String> = v
            .as_object()
            .into_iter()
            .flatten()
            .filter(|(_, x)| x.is_boolean())
            .map(|(k, x)| format!("{k} = {x}"))
            .collect();
        if verdicts.is_empty() {
            format!("{name}: done")
        } else {
            format!("{name}: {}", verdicts.join(", "))
        }
    };
    format!("{summary}\n{}\n", serde_json::to_string_pretty(&v).expect("values serialize"))
}

fn command_name(c: &Command) -> String {
    let sub = |s: &str| s.to_string();
    match c {
        Command::Validate(_) => sub("validate"),
        Command::Build(b) => format!(
            "build {}",
            match b {
                Build::Unit { .. } => "unit",
                Build::Pair { .. } => "pair",
                Build::Group { .. } => "group",
                Build::Action { .. } => "action",
                Build::KernelPair { .. } => "kernel-pair",
                Build::Cech { .. } => "cech",
                Build::Gauge { .. } => "gauge",
                Build::Arrow { .. } => "arrow",
                Build::Restrict { .. } => "restrict",
            }
        ),
        Command::Analyze { .. } => sub("analyze"),
        Command::Weq { .. } => sub("weq"),
        Command::Charequi { .. } => sub("charequi"),
        Command::Morita { .. } => sub("morita"),
        Command::Frac(f) => format!(
            "frac {}",
            match f {
                Frac::Eq { .. } => "eq",
                Frac::Compose { .. } => "compose",
                Frac::Invert { .. } => "invert",
                Frac::Refine { .. } => "refine",
            }
        ),
        Command::Bib(b) => format!(
            "bib {}",
            match b {
                Bib::Tofrac { .. } => "tofrac",
                Bib::Fromfrac { .. } => "fromfrac",
                Bib::Roundtrip { .. } => "roundtrip",
                Bib::Gauge { .. } => "gauge",
            }
        ),
        Command::Rep(r) => format!(
            "rep {}",
            match r {
                Rep::Validate { .. } => "validate",
                Rep::Pullback { .. } => "pullback",
                Rep::Sum { .. } => "sum",
                Rep::Iso { .. } => "iso",
            }
        ),
    }
}

type Outcome = Result<Report, Failure>;

fn dispatch(c: &Command, inputs: &Inputs) -> Outcome {
    match c {
        Command::Validate(a) => validate(a, inputs),
        Command::Build(b) => build(b, inputs),
        Command::Analyze { groupoid } => analyze(&inputs.groupoid(groupoid)?),
        Command::Weq { map } => weq(&inputs.map(map)?),
        Command::Charequi { map } => Ok(Report::verdict("charequi", charequi_check(&inputs.map(map)?))),
        Command::Morita { a, b, oracle } => morita(&inputs.groupoid(a)?, &inputs.groupoid(b)?, *oracle),
        Command::Frac(f) => frac(f, inputs),
        Command::Bib(b) => bib(b, inputs),
        Command::Rep(r) => rep(r, inputs),
    }
}

fn validate(a: &ValidateArgs, inputs: &Inputs) -> Outcome {
    let payload = ["groupoid", "group", "map", "fraction", "span", "bibundle", "rep"];
    let kind = match a.kind {
        Some(k) => k,
        None => Kind::detect(&inputs.value(&a.input, &payload)?)
            .ok_or_else(|| Failure::from(Error::Malformed("cannot tell what the input holds; pass --kind".into())))?,
    };
    let canonical = match kind {
        Kind::Groupoid => groupoid_json(&*inputs.groupoid(&a.input)?),
        Kind::Group => group_json(&inputs.group(&a.input)?),
        Kind::Map => map_json(&inputs.map(&a.input)?),
        Kind::Fraction => fraction_json(&inputs.fraction(&a.input)?),
        Kind::Bibundle => bibundle_json(&inputs.bibundle(&a.input)?),
        Kind::Rep => {
            let g = a.groupoid.as_ref().ok_or_else(|| Failure::usage("a representation needs --groupoid"))?;
            rep_json(&inputs.rep(&a.input, &inputs.groupoid(g)?)?)
        }
        Kind::Natiso => {
            let (Some(from), Some(to)) = (&a.from, &a.to) else {
                return Err(Failure::usage("a natural isomorphism needs --from and --to"));
            };
            let (from, to) = (inputs.map(from)?, inputs.map(to)?);
            let v = inputs.value(&a.input, &["natiso"])?;
            natiso_json(&Decoder::new().natiso(&v, &from, &to)?)
        }
    };
    Ok(Report::verdict("valid", true).with("kind", kind.name().into()).with("value", canonical))
}

fn json_arg<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    let v = parse(text, what)?;
    serde_json::from_value(v).map_err(|e| Error::Malformed(format!("{what}: {e}")).into())
}

fn bounded(what: &'static str, pairs: Option<usize>) -> Result<(), Failure> {
    let size = pairs.unwrap_or(usize::MAX);
    if size > BUILD_TABLE_BOUND {
        return Err(Error::Scale { what, size, bound: BUILD_TABLE_BOUND }.into());
    }
    Ok(())
}

fn action_table(group: &Group, spec: &str) -> Result<Vec<Vec<usize>>, Failure> {
    match spec {
        "natural" => {
            // the symmetric group on n letters has n! elements
            let n = (0..=group.order()).find(|&n| (1..=n).product::<usize>() == group.order());
            let n = n.ok_or_else(|| Failure::usage("natural action needs a symmetric group"))?;
            let table = group::natural_action(n);
            if Group::symmetric(n) != *group {
                return Err(Failure::usage("natural action needs a symmetric group"));
            }
            Ok(table)
        }
        "regular" => Ok(group::left_regular_action(group)),
        _ => match spec.strip_prefix("trivial:") {
            Some(n) => {
                let n: usize = n.parse().map_err(|_| Failure::usage("trivial:n needs a number"))?;
                bounded("action groupoid composition table", group.order().checked_pow(2).and_then(|o| o.checked_mul(n)))?;
                Ok(group::trivial_action(group, n))
            }
            None => json_arg(spec, "action"),
        },
    }
}

fn groupoid_report(g: &FiniteGroupoid) -> Report {
    Report::payload().with("groupoid", groupoid_json(g))
}

fn build(b: &Build, inputs: &Inputs) -> Outcome {
    let g = match b {
        Build::Unit { n } => {
            bounded("unit groupoid composition table", Some(*n))?;
            unit_groupoid(*n)
        }
        Build::Pair { n } => {
            bounded("pair groupoid composition table", n.checked_pow(3))?;
            pair_groupoid(*n)
        }
        Build::Group { group } => group_groupoid(&inputs.group(group)?),
        Build::Action { group, action } => {
            let grp = inputs.group(group)?;
            let act = action_table(&grp, action)?;
            action_groupoid(&grp, &act)?
        }
        Build::KernelPair { map } => {
            let f: Vec<usize> = json_arg(map, "map")?;
            let mut fibres = std::collections::BTreeMap::new();
            for &y in &f {
                *fibres.entry(y).or_insert(0usize) += 1;
            }
            bounded("kernel pair composition table", fibres.values().try_fold(0usize, |s, &k| s.checked_add(k.checked_pow(3)?)))?;
            kernel_pair_groupoid(&f)
        }
        Build::Cech { points, cover } => {
            let cover: Vec<Vec<usize>> = json_arg(cover, "cover")?;
            let per_point = cover.iter().flatten().fold(vec![0usize; *points], |mut acc, &x| {
                if let Some(c) = acc.get_mut(x) {
                    *c += 1;
                }
                acc
            });
            bounded("Čech groupoid composition table", per_point.iter().try_fold(0usize, |s, &k| s.checked_add(k.checked_pow(3)?)))?;
            cech_groupoid(*points, &cover)?
        }
        Build::Gauge { group, action } => {
            let grp = inputs.group(group)?;
            let act = action_table(&grp, action)?;
            let points = act.first().map_or(0, Vec::len);
            bounded("gauge groupoid composition table", points.checked_pow(3))?;
            gauge_groupoid(&grp, &act)?
        }
        Build::Arrow { groupoid } => {
            let g = inputs.groupoid(groupoid)?;
            bounded("arrow groupoid composition table", g.n_arrows().checked_pow(4))?;
            let a = arrow_groupoid(&g);
            return Ok(groupoid_report(&a.groupoid)
                .witness("source", map_json(&a.source))
                .witness("target", map_json(&a.target)));
        }
        Build::Restrict { groupoid, objects } => {
            let g = inputs.groupoid(groupoid)?;
            let objects: Vec<ObjectId> = json_arg(objects, "objects")?;
            let r = restriction(&g, &objects)?;
            return Ok(groupoid_report(&r.groupoid).witness("inclusion", map_json(&r.inclusion)));
        }
    };
    Ok(groupoid_report(&g))
}

fn analyze(g: &Arc<FiniteGroupoid>) -> Outcome {
    let orbits = orbits(g);
    let mut isotropy_json = Vec::new();
    let mut orders = Vec::new();
    for orbit in &orbits {
        let iso = isotropy(g, orbit[0])?;
        orders.push(iso.group.order());
        isotropy_json.push(json!({
            "object": iso.object,
            "order": iso.group.order(),
            "arrows": iso.arrows,
            "table": iso.group.rows(),
        }));
    }
    Ok(Report::payload()
        .with("n_objects", g.n_objects().into())
        .with("n_arrows", g.n_arrows().into())
        .with("orbits", json!(orbits))
        .with("isotropy_orders", json!(orders))
        .with("isotropy", Value::Array(isotropy_json))
        .with("anchor_fibers", json!(g.hom_sizes())))
}

fn weq(f: &GroupoidMap) -> Outcome {
    let ff = is_fully_faithful(f);
    let es = is_essentially_surjective(f);
    let holds = is_weak_equivalence(f);
    let mut r = Report::verdict("weak_equivalence", holds)
        .with("fully_faithful", ff.into())
        .with("essentially_surjective", es.into());
    if holds {
        let (q, eta) = quasi_inverse(f)?;
        r = r.witness("quasi_inverse", map_json(&q)).witness("natiso", natiso_json(&eta));
    }
    if !ff {
        let (h, g) = (f.domain(), f.codomain());
        'find: for x in h.objects() {
            for y in h.objects() {
                let mut images: Vec<ArrowId> = h.hom(y, x).iter().map(|&a| f.arrow(a)).collect();
                images.sort_unstable();
                images.dedup();
                if images.len() != h.hom(y, x).len() || images.len() != g.hom(f.object(y), f.object(x)).len() {
                    r = r.witness("not_fully_faithful", json!({ "from": x, "to": y }));
                    break 'find;
                }
            }
        }
    }
    if !es {
        let g = f.codomain();
        let mut reached = vec![false; g.n_objects()];
        for x in f.domain().objects() {
            for &a in g.arrows_from(f.object(x)) {
                reached[g.tgt(a)] = true;
            }
        }
        if let Some(y) = reached.iter().position(|&b| !b) {
            r = r.witness("unreached", y.into());
        }
    }
    Ok(r)
}

fn oracle_bound(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(ORACLE_BOUND_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::usage(&format!("{ORACLE_BOUND_VAR}={s:?} is not a number"))),
        Err(_) => Ok(DEFAULT_ORACLE_BOUND),
    }
}

fn morita(a: &Arc<FiniteGroupoid>, b: &Arc<FiniteGroupoid>, oracle: Option<Option<usize>>) -> Outcome {
    let v = morita_equivalent(a, b)?;
    let mut r = Report::verdict("morita", v.equivalent).with("span", v.span.as_ref().map_or(Value::Null, fraction_json));
    if let Some(flag) = oracle {
        let bound = oracle_bound(flag)?;
        r = r.with("oracle", span_search_oracle(a, b, bound)?.into()).with("oracle_bound", bound.into());
    }
    Ok(r)
}

fn frac(f: &Frac, inputs: &Inputs) -> Outcome {
    match f {
        Frac::Eq { a, b, oracle } => {
            let (fa, fb) = (inputs.fraction(a)?, inputs.fraction(b)?);
            let w = fraction_equal_witness(&fa, &fb)?;
            let mut r = Report::verdict("equal", w.is_some());
            if let Some((apex, iso)) = w {
                r = r.witness("apex", groupoid_json(&apex)).witness("natiso", natiso_json(&iso));
            }
            if let Some(flag) = oracle {
                let bound = oracle_bound(*flag)?;
                r = r
                    .with("oracle", fraction_equal_oracle(&fa, &fb, bound)?.into())
                    .with("oracle_bound", bound.into());
            }
            Ok(r)
        }
        Frac::Compose { a, b } => {
            let c = compose_fractions(&inputs.fraction(a)?, &inputs.fraction(b)?)?;
            Ok(Report::payload().with("fraction", fraction_json(&c)))
        }
        Frac::Invert { fraction } => {
            let inv = invert_fraction(&inputs.fraction(fraction)?)?;
            Ok(Report::payload().with("fraction", fraction_json(&inv)))
        }
        Frac::Refine { fraction, cover } => {
            let fr = inputs.fraction(fraction)?;
            let re = match cover {
                Some(c) => refine_over(&fr, &json_arg::<Vec<Vec<ObjectId>>>(c, "cover")?)?,
                None => refine_over_cover(&fr)?,
            };
            Ok(Report::payload()
                .with("fraction", fraction_json(&re.fraction))
                .with("cover", json!(re.cover)))
        }
    }
}

fn bib(b: &Bib, inputs: &Inputs) -> Outcome {
    match b {
        Bib::Tofrac { bibundle } => {
            let bf = bibundle_to_fraction(&inputs.bibundle(bibundle)?)?;
            Ok(Report::payload().with("fraction", fraction_json(&bf.fraction)))
        }
        Bib::Fromfrac { fraction } => {
            let fb = fraction_to_bibundle(&inputs.fraction(fraction)?)?;
            Ok(Report::payload().with("bibundle", bibundle_json(&fb.bibundle)))
        }
        Bib::Roundtrip { input } => {
            let v = inputs.value(input, &["bibundle", "fraction"])?;
            if v.get("carrier").is_some() {
                let points = roundtrip_beta_alpha(&inputs.bibundle(input)?)?;
                Ok(Report::verdict("round_trip", true).witness("isomorphism", json!(points)))
            } else {
                let fr = inputs.fraction(input)?;
                let w = roundtrip_alpha_beta(&fr)?;
                let equal = fraction_equal(&w.fraction, &fr)?;
                Ok(Report::verdict("round_trip", equal).witness("fraction", fraction_json(&w.fraction)))
            }
        }
        Bib::Gauge { bibundle } => {
            let gi = gauge_from_bibundle(&inputs.bibundle(bibundle)?)?;
            Ok(Report::verdict("isomorphism", gi.iso.is_isomorphism())
                .with("groupoid", groupoid_json(&gi.gauge.groupoid))
                .with("map", map_json(&gi.iso)))
        }
    }
}

fn matrices_json(t: &[Matrix]) -> Value {
    Value::Array(t.iter().map(|m| json!(m.to_strings())).collect())
}

fn rep(r: &Rep, inputs: &Inputs) -> Outcome {
    match r {
        Rep::Validate { groupoid, rep } => {
            let rep = inputs.rep(rep, &inputs.groupoid(groupoid)?)?;
            Ok(Report::verdict("valid", true).with("rep", rep_json(&rep)))
        }
        Rep::Pullback { map, rep } => {
            let f = inputs.map(map)?;
            let rep = inputs.rep(rep, f.codomain())?;
            let p = pullback_rep(&rep, &f)?;
            Ok(Report::payload().with("rep", rep_json(&p)).with("groupoid", groupoid_json(f.domain())))
        }
        Rep::Sum { groupoid, a, b } => {
            let g = inputs.groupoid(groupoid)?;
            let s = direct_sum(&inputs.rep(a, &g)?, &inputs.rep(b, &g)?)?;
            Ok(Report::payload().with("rep", rep_json(&s)))
        }
        Rep::Iso { groupoid, a, b } => {
            let g = inputs.groupoid(groupoid)?;
            let (ra, rb) = (inputs.rep(a, &g)?, inputs.rep(b, &g)?);
            let t = find_rep_isomorphism(&ra, &rb)?;
            let mut rep = Report::verdict("isomorphic", t.is_some());
            if let Some(t) = t {
                rep = rep.witness("intertwiner", matrices_json(&t));
            }
            Ok(rep)
        }
    }
}
