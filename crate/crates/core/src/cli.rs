//! The `legcalc` command line: noun-verb subcommands, JSON in and out.
//!
//! Exit codes: 0 decided, 1 a yes/no query answered no, 2 usage or
//! validation error, 3 the classification leaves the answer open.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::cables::{self, CableSpec, KnotTypeData, SlopeRegime};
use crate::farey::{self, Slope};
use crate::fronts::{self, FrontWord, TangleKind};
use crate::links::{Decision, LinkMultiset, OrderedLink, Permutation};
use crate::mountain::{Invariants, Sign};
use crate::toruslinks::{self, TorusLinkSpec};

pub const EXIT_DECIDED: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "legcalc", version, about = "Legendrian torus and cable link calculator")]
struct Cli {
    /// Add a human-readable rationale to the output.
    #[arg(long, global = true)]
    explain: bool,
    #[command(subcommand)]
    noun: Noun,
}

#[derive(Subcommand, Debug)]
enum Noun {
    /// Farey graph arithmetic.
    #[command(subcommand)]
    Farey(FareyCmd),
    /// Mountain ranges of knot types.
    #[command(subcommand)]
    Range(RangeCmd),
    /// Legendrian and transverse (np, ±nq) torus links.
    #[command(subcommand)]
    Torus(TorusCmd),
    /// Legendrian and transverse (np, nq) cables.
    #[command(subcommand)]
    Cable(CableCmd),
    /// Front diagrams.
    #[command(subcommand)]
    Front(FrontCmd),
}

#[derive(Subcommand, Debug)]
enum FareyCmd {
    /// Mediant of two slopes.
    Mediant(TwoSlopes),
    /// Geometric intersection number and adjacency.
    Intersect(TwoSlopes),
    /// Whether a slope lies on the clockwise arc between two others.
    Contains {
        #[arg(allow_hyphen_values = true)]
        from: Slope,
        #[arg(allow_hyphen_values = true)]
        to: Slope,
        #[arg(allow_hyphen_values = true)]
        slope: Slope,
    },
    /// Shortest clockwise path in the Farey graph.
    Path(TwoSlopes),
}

#[derive(Args, Debug)]
struct TwoSlopes {
    #[arg(allow_hyphen_values = true)]
    a: Slope,
    #[arg(allow_hyphen_values = true)]
    b: Slope,
}

#[derive(Args, Debug)]
struct KnotArg {
    /// Built-in knot type: unknot, fig8 or torus:p:q.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "knot_file", required_unless_present = "knot_file")]
    knot: Option<String>,
    /// JSON knot type data.
    #[arg(long)]
    knot_file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum RangeCmd {
    /// Peaks and derived data of a knot type.
    Show(KnotArg),
    /// Whether (tb, r) is realized.
    Check {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long, allow_hyphen_values = true)]
        tb: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
    },
    /// All classes with tb at or above a threshold.
    Points {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long, allow_hyphen_values = true)]
        tb0: i64,
    },
}

#[derive(Args, Debug)]
struct TorusArgs {
    #[arg(short = 'n')]
    n: usize,
    #[arg(short = 'p')]
    p: i64,
    #[arg(short = 'q')]
    q: i64,
    /// + or -.
    #[arg(long, allow_hyphen_values = true)]
    sign: Sign,
}

#[derive(Subcommand, Debug)]
enum TorusCmd {
    /// Non-destabilizable representatives.
    Reps(TorusArgs),
    /// Whether component invariants are realized, with witnesses.
    Realize {
        #[command(flatten)]
        spec: TorusArgs,
        /// JSON array of {"tb", "r"}.
        #[arg(long)]
        link: String,
    },
    /// Unordered Legendrian isotopy of two realizable links.
    Isotopic {
        #[command(flatten)]
        spec: TorusArgs,
        #[arg(long)]
        link: String,
        #[arg(long)]
        other: String,
    },
    /// Non-destabilizable links a realizable link stabilizes from.
    Destab {
        #[command(flatten)]
        spec: TorusArgs,
        #[arg(long)]
        link: String,
    },
    /// Total tb of a link and the bound on component tb sums.
    Tb {
        #[command(flatten)]
        spec: TorusArgs,
        #[arg(long)]
        link: String,
    },
    /// Realizable permutations of an ordered link.
    Perms {
        #[command(flatten)]
        spec: TorusArgs,
        /// JSON array of {"tb", "r", "cyclic"?}.
        #[arg(long)]
        link: String,
        /// JSON array sigma with i -> sigma[i]; omit to count all.
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Transverse torus links: maximal self-linking and realizability.
    Transverse {
        #[command(flatten)]
        spec: TorusArgs,
        /// JSON array of self-linking numbers.
        #[arg(long)]
        sls: Option<String>,
    },
}

#[derive(Args, Debug)]
struct CableArgs {
    #[command(flatten)]
    knot: KnotArg,
    #[arg(short = 'n', default_value_t = 1)]
    n: usize,
    #[arg(short = 'p')]
    p: i64,
    #[arg(short = 'q', allow_hyphen_values = true)]
    q: i64,
}

#[derive(Subcommand, Debug)]
enum CableCmd {
    /// Slope regime of q/p against the maximal tb of the companion.
    Regime(CableArgs),
    /// Non-destabilizable representatives.
    Reps(CableArgs),
    /// Whether component invariants are realized.
    Realize {
        #[command(flatten)]
        spec: CableArgs,
        #[arg(long)]
        link: String,
    },
    /// Realizable permutations of an ordered cable link.
    Perms {
        #[command(flatten)]
        spec: CableArgs,
        #[arg(long)]
        link: String,
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Maximal self-linking number of a transverse cable.
    Transverse(CableArgs),
    /// Maximal tb of a cable knot and the link tb-sum bound.
    Maxtb(CableArgs),
}

#[derive(Args, Debug)]
struct Output {
    /// Write an SVG drawing here.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Include an ASCII drawing in the output.
    #[arg(long)]
    ascii: bool,
}

#[derive(Args, Debug)]
struct FrontInput {
    /// FrontWord JSON.
    #[arg(long, conflicts_with = "front_file", required_unless_present = "front_file")]
    front: Option<String>,
    #[arg(long)]
    front_file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum FrontCmd {
    /// Front of a standard cable of a built-in knot.
    Cable {
        #[command(flatten)]
        spec: CableArgs,
        /// s or z, for slopes below tb.
        #[arg(long)]
        kind: Option<TangleKind>,
        /// Rotation number of the companion class to cable.
        #[arg(long, allow_hyphen_values = true)]
        base_r: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Front of a maximal torus link representative.
    Torus {
        #[command(flatten)]
        spec: TorusArgs,
        /// Rotation number of the components (negative links).
        #[arg(long, allow_hyphen_values = true)]
        rot: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Front of a t-twisted n-copy of a class of a built-in knot.
    Twisted {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 't')]
        t: usize,
        #[arg(long, allow_hyphen_values = true)]
        tb: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Invariants of a front given as JSON.
    Invariants {
        #[command(flatten)]
        input: FrontInput,
    },
    /// Draw a front; prints the drawing itself rather than JSON.
    Render {
        #[command(flatten)]
        input: FrontInput,
        #[arg(long, default_value = "svg")]
        format: String,
    },
}

/// A failure, reported as JSON with exit code 2.
#[derive(Debug)]
struct Failure {
    kind: &'static str,
    message: String,
    path: Option<String>,
}

impl Failure {
    fn new(kind: &'static str, e: impl std::fmt::Display) -> Self {
        Failure { kind, message: e.to_string(), path: None }
    }

    fn to_json(&self) -> Value {
        let mut v = json!({ "kind": self.kind, "message": self.message });
        if let Some(p) = &self.path {
            v["path"] = json!(p);
        }
        json!({ "error": v })
    }
}

macro_rules! impl_failure {
    ($($t:ty => $kind:literal),* $(,)?) => {
        $(impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::new($kind, e)
            }
        })*
    };
}

impl_failure!(
    crate::farey::FareyError => "farey",
    crate::mountain::MountainError => "range",
    crate::links::LinkError => "link",
    crate::cables::CableError => "cable",
    crate::fronts::FrontError => "front",
    std::io::Error => "io",
);

type CmdResult = Result<Reply, Failure>;

/// Successful output: a JSON body, or raw text for `front render`.
struct Reply {
    code: i32,
    body: Value,
    explain: String,
    raw: Option<String>,
}

impl Reply {
    fn decided(body: Value, explain: impl Into<String>) -> Self {
        Reply { code: EXIT_DECIDED, body, explain: explain.into(), raw: None }
    }

    fn yes_no(yes: bool, body: Value, explain: impl Into<String>) -> Self {
        Reply { code: if yes { EXIT_DECIDED } else { EXIT_NO }, body, explain: explain.into(), raw: None }
    }
}

fn parse_json<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| Failure {
        kind: "json",
        message: format!("{what}: {}", e.inner()),
        path: Some(e.path().to_string()),
    })
}

fn read_json<T: DeserializeOwned>(what: &str, path: &PathBuf) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)?;
    parse_json(what, &text)
}

fn load_knot(k: &KnotArg) -> Result<KnotTypeData, Failure> {
    match (&k.knot, &k.knot_file) {
        (Some(name), _) => Ok(KnotTypeData::builtin(name)?),
        (None, Some(path)) => read_json("knot file", path),
        (None, None) => Err(Failure::new("usage", "give --knot or --knot-file")),
    }
}

fn load_front(i: &FrontInput) -> Result<FrontWord, Failure> {
    match (&i.front, &i.front_file) {
        (Some(text), _) => parse_json("front", text),
        (None, Some(path)) => read_json("front file", path),
        (None, None) => Err(Failure::new("usage", "give --front or --front-file")),
    }
}

fn torus_spec(a: &TorusArgs) -> Result<TorusLinkSpec, Failure> {
    Ok(TorusLinkSpec::new(a.n, a.p, a.q, a.sign)?)
}

fn cable_spec(a: &CableArgs) -> Result<(KnotTypeData, CableSpec), Failure> {
    Ok((load_knot(&a.knot)?, CableSpec::new(a.n, a.p, a.q)?))
}

fn sigma_of(text: &str) -> Result<Permutation, Failure> {
    parse_json("sigma", text)
}

fn with_warnings(mut body: Value, k: &KnotTypeData) -> Value {
    let w = k.range().warnings();
    if !w.is_empty() {
        body["warnings"] = json!(w);
    }
    body
}

/// Runs the command line and returns the exit code and the text for
/// standard output.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            return match e.kind() {
                DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand
                    if e.kind() != DisplayHelpOnMissingArgumentOrSubcommand =>
                {
                    (EXIT_DECIDED, e.render().to_string())
                }
                _ => {
                    let f = Failure::new("usage", e.render().to_string().trim_end());
                    (EXIT_ERROR, pretty(&f.to_json()))
                }
            };
        }
    };
    match dispatch(&cli.noun) {
        Ok(Reply { raw: Some(text), code, .. }) => (code, text),
        Ok(Reply { code, mut body, explain, .. }) => {
            if cli.explain {
                body["explain"] = json!(explain);
            }
            (code, pretty(&body))
        }
        Err(f) => (EXIT_ERROR, pretty(&f.to_json())),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn dispatch(noun: &Noun) -> CmdResult {
    match noun {
        Noun::Farey(c) => farey_cmd(c),
        Noun::Range(c) => range_cmd(c),
        Noun::Torus(c) => torus_cmd(c),
        Noun::Cable(c) => cable_cmd(c),
        Noun::Front(c) => front_cmd(c),
    }
}

fn farey_cmd(c: &FareyCmd) -> CmdResult {
    Ok(match c {
        FareyCmd::Mediant(TwoSlopes { a, b }) => {
            let m = farey::mediant(*a, *b)?;
            Reply::decided(
                json!({ "mediant": m, "adjacent_to_both": farey::is_edge(m, *a) && farey::is_edge(m, *b) }),
                format!("The mediant of {a} and {b} adds numerators and denominators."),
            )
        }
        FareyCmd::Intersect(TwoSlopes { a, b }) => {
            let i = farey::intersection_number(*a, *b);
            Reply::decided(
                json!({ "intersection": i, "edge": i == 1 }),
                format!(
                    "Curves of slopes {a} and {b} meet |ad - bc| = {i} times; they span a Farey edge iff this is 1."
                ),
            )
        }
        FareyCmd::Contains { from, to, slope } => {
            if from == to {
                return Err(farey::FareyError::DegenerateArc(*from).into());
            }
            let yes = farey::clockwise_contains(*from, *to, *slope);
            Reply::yes_no(
                yes,
                json!({ "contains": yes }),
                format!("Clockwise order on the Farey circle: 0 at the top, positive slopes on the right, inf at the bottom; {slope} is {}on the arc from {from} to {to}.", if yes { "" } else { "not " }),
            )
        }
        FareyCmd::Path(TwoSlopes { a, b }) => {
            let p = farey::minimal_path(*a, *b)?;
            Reply::decided(
                json!({ "path": p, "edges": p.edges() }),
                format!("Each edge of the shortest clockwise Farey path is one basic slice; {} in all.", p.edges()),
            )
        }
    })
}

fn range_cmd(c: &RangeCmd) -> CmdResult {
    Ok(match c {
        RangeCmd::Show(k) => {
            let k = load_knot(k)?;
            Reply::decided(
                with_warnings(serde_json::to_value(&k).unwrap(), &k),
                "Peaks are the non-destabilizable classes; every other class is a stabilization of one.",
            )
        }
        RangeCmd::Check { knot, tb, r } => {
            let k = load_knot(knot)?;
            let yes = k.range().contains(*tb, *r);
            Reply::yes_no(
                yes,
                with_warnings(json!({ "contains": yes }), &k),
                format!(
                    "({tb}, {r}) is realized iff some peak P has P.tb - tb >= |r - P.r| with matching parity; {}.",
                    if yes { "one does" } else { "none does" }
                ),
            )
        }
        RangeCmd::Points { knot, tb0 } => {
            let k = load_knot(knot)?;
            let pts = k.range().lattice_points_at_or_above(*tb0);
            Reply::decided(
                with_warnings(json!({ "count": pts.len(), "points": pts }), &k),
                format!("All classes of {} with tb >= {tb0}, highest first.", k.name()),
            )
        }
    })
}

fn torus_reps_explain(spec: &TorusLinkSpec) -> String {
    match (spec.sign(), spec.p()) {
        (Sign::Pos, _) => "Realization and unordered torus link classification. A positive torus link has a unique non-destabilizable realization: n copies of the maximal tb (p, q) torus knot, each with tb = pq - p - q and r = 0.".into(),
        (Sign::Neg, 1) => "Realization and unordered torus link classification. For (n, -nq) links the non-destabilizable realizations are the n-copies of the q unknots with tb = -q and the t-twisted n-copies of the unknots with tb = -q + t for 1 <= t < q, q(q+1)/2 in all.".into(),
        _ => "Realization and unordered torus link classification. For negative links with p >= 2 every realization destabilizes to the n-copy of one of the 2m maximal tb (p, -q) torus knots.".into(),
    }
}

fn torus_cmd(c: &TorusCmd) -> CmdResult {
    Ok(match c {
        TorusCmd::Reps(a) => {
            let spec = torus_spec(a)?;
            let reps = toruslinks::nondestabilizable_reps(&spec);
            Reply::decided(
                json!({ "link": spec.to_string(), "count": reps.len(), "reps": reps }),
                torus_reps_explain(&spec),
            )
        }
        TorusCmd::Realize { spec, link } => {
            let spec = torus_spec(spec)?;
            let link: LinkMultiset = parse_json("link", link)?;
            let r = toruslinks::is_realizable(&spec, &link)?;
            let explain = format!(
                "{} {}",
                torus_reps_explain(&spec),
                if r.realizable {
                    "The link lies in the stabilization cone of the listed witnesses."
                } else {
                    "No representative's cone contains the components under any matching."
                }
            );
            Reply::yes_no(r.realizable, serde_json::to_value(&r).unwrap(), explain)
        }
        TorusCmd::Isotopic { spec, link, other } => {
            let spec = torus_spec(spec)?;
            let a: LinkMultiset = parse_json("link", link)?;
            let b: LinkMultiset = parse_json("other", other)?;
            let yes = toruslinks::unordered_isotopic(&spec, &a, &b)?;
            Reply::yes_no(
                yes,
                json!({ "isotopic": yes }),
                "Realization and unordered torus link classification. Legendrian torus links are determined, as unordered links, by the multiset of component invariants.",
            )
        }
        TorusCmd::Destab { spec, link } => {
            let spec = torus_spec(spec)?;
            let link: LinkMultiset = parse_json("link", link)?;
            let reps = toruslinks::common_destabilizations(&spec, &link)?;
            Reply::decided(
                json!({ "count": reps.len(), "reps": reps }),
                "Every non-destabilizable representative whose stabilization cone contains the link.",
            )
        }
        TorusCmd::Tb { spec, link } => {
            let spec = torus_spec(spec)?;
            let link: LinkMultiset = parse_json("link", link)?;
            let total = toruslinks::total_tb(&spec, &link)?;
            let bound = toruslinks::max_component_tb_sum(&spec);
            let sum: i64 = link.components().iter().map(|c| c.tb).sum();
            Reply::decided(
                json!({ "total_tb": total, "component_tb_sum": sum, "max_component_tb_sum": bound }),
                "tb of the link is the sum of component tb plus twice the pairwise linking numbers, each ±pq.",
            )
        }
        TorusCmd::Perms { spec, link, sigma } => {
            let spec = torus_spec(spec)?;
            let link: OrderedLink = parse_json("link", link)?;
            let explain = match spec.sign() {
                Sign::Pos => "Ordered torus link classification. Positive torus links admit every permutation preserving component invariants.",
                Sign::Neg => "Ordered torus link classification. For negative torus links a permutation must rotate the maximal tb components in their cyclic order and preserve the invariants of the others.",
            };
            match sigma {
                Some(s) => {
                    let sigma = sigma_of(s)?;
                    let yes = toruslinks::permutation_realizable(&spec, &link, &sigma)?;
                    Reply::yes_no(yes, json!({ "decision": Decision::from(yes) }), explain)
                }
                None => {
                    let count = toruslinks::realizable_permutation_count(&spec, &link)?;
                    let mut body = json!({ "count": count });
                    if spec.n() <= 6 {
                        let perms: Vec<Permutation> = Permutation::all(spec.n())
                            .filter(|s| toruslinks::permutation_realizable(&spec, &link, s).unwrap_or(false))
                            .collect();
                        body["permutations"] = json!(perms);
                    }
                    Reply::decided(body, explain)
                }
            }
        }
        TorusCmd::Transverse { spec, sls } => {
            let spec = torus_spec(spec)?;
            let top = toruslinks::transverse_sl_max_component(spec.p(), spec.q(), spec.sign())?;
            let explain = "Transverse torus link classification. Transverse torus links are determined by the self-linking numbers of their components, each at most ±q(p-1) - p with the same parity; all sl-preserving permutations are realized.";
            match sls {
                Some(s) => {
                    let sls: Vec<i64> = parse_json("sls", s)?;
                    let yes = toruslinks::transverse_realizable(&spec, &sls)?;
                    Reply::yes_no(yes, json!({ "sl_max_component": top, "realizable": yes }), explain)
                }
                None => Reply::decided(json!({ "sl_max_component": top }), explain),
            }
        }
    })
}

fn regime_explain(r: SlopeRegime) -> &'static str {
    match r {
        SlopeRegime::Greater => "Legendrian cable classification. q/p exceeds the maximal tb of the companion: the standard cable is the np-copy with s = q - p·tb̄ positive twists per copy; any invariant-preserving permutation is realized.",
        SlopeRegime::TbSlope => "Legendrian cable classification. q/p equals the maximal tb of the companion: the standard cable is the n-copy of a maximal tb representative; the linear order of the maximal tb components is rigid.",
        SlopeRegime::IntegralLesser => "Legendrian cable classification. q is an integer below the maximal tb: realizations destabilize to n-copies of the classes with tb = q or t-twisted n-copies of classes with tb = q + t; maximal tb components can only be permuted cyclically.",
        SlopeRegime::NonintegralLesser => "Legendrian cable classification. q/p is below the maximal tb and not an integer: the standard cables are n-copies of the p-copy of a class with tb = ⌈q/p⌉ closed with S or Z tangles; maximal tb components can only be permuted cyclically.",
    }
}

fn cable_cmd(c: &CableCmd) -> CmdResult {
    Ok(match c {
        CableCmd::Regime(a) => {
            let (k, spec) = cable_spec(a)?;
            let r = cables::slope_regime(&k, &spec);
            let (s, base_tb) = cables::standard_twisting(&k, &spec);
            Reply::decided(
                with_warnings(
                    json!({ "regime": r, "tb_bar": k.tb_bar(), "twisting": s, "base_tb": base_tb, "standard": cables::std_cable_components(&k, &spec) }),
                    &k,
                ),
                regime_explain(r),
            )
        }
        CableCmd::Reps(a) => {
            let (k, spec) = cable_spec(a)?;
            let reps = cables::nondestabilizable_reps_cable(&k, &spec)?;
            let r = cables::slope_regime(&k, &spec);
            Reply::decided(
                with_warnings(json!({ "regime": r, "count": reps.len(), "reps": reps }), &k),
                regime_explain(r),
            )
        }
        CableCmd::Realize { spec, link } => {
            let (k, spec) = cable_spec(spec)?;
            let link: LinkMultiset = parse_json("link", link)?;
            let r = cables::is_realizable_cable(&k, &spec, &link)?;
            Reply::yes_no(
                r.realizable,
                with_warnings(serde_json::to_value(&r).unwrap(), &k),
                regime_explain(cables::slope_regime(&k, &spec)),
            )
        }
        CableCmd::Perms { spec, link, sigma } => {
            let (k, spec) = cable_spec(spec)?;
            let link: OrderedLink = parse_json("link", link)?;
            let regime = cables::slope_regime(&k, &spec);
            match sigma {
                Some(s) => {
                    let sigma = sigma_of(s)?;
                    let d = cables::permutation_realizable_cable(&k, &spec, &link, &sigma)?;
                    let code = match d {
                        Decision::Yes => EXIT_DECIDED,
                        Decision::No => EXIT_NO,
                        Decision::Unknown => EXIT_UNKNOWN,
                    };
                    let explain = if d == Decision::Unknown {
                        "Ordered cable classification. The companion is itself a cable whose slope product equals q/p; the classification does not decide which permutations are realized here."
                    } else {
                        regime_explain(regime)
                    };
                    Reply { code, body: json!({ "decision": d, "regime": regime }), explain: explain.into(), raw: None }
                }
                None => {
                    let (yes, no, unknown) = cables::permutation_decision_counts(&k, &spec, &link)?;
                    Reply {
                        code: if unknown > 0 { EXIT_UNKNOWN } else { EXIT_DECIDED },
                        body: json!({ "regime": regime, "yes": yes, "no": no, "unknown": unknown }),
                        explain: regime_explain(regime).into(),
                        raw: None,
                    }
                }
            }
        }
        CableCmd::Transverse(a) => {
            let (k, spec) = cable_spec(a)?;
            let sl = cables::transverse_cable_sl_max(&k, spec.p(), spec.q())?;
            Reply::decided(
                json!({ "sl_max_component": sl, "sl_bar": k.sl_bar() }),
                "Transverse cable classification. The maximal self-linking number of a transverse cable is pq - q + p·sl̄ of the companion, the largest tb - r over the standard cables.",
            )
        }
        CableCmd::Maxtb(a) => {
            let (k, spec) = cable_spec(a)?;
            let top = cables::cable_max_tb_component(&k, spec.p(), spec.q())?;
            let sum = cables::max_component_tb_sum_cable(&k, &spec)?;
            Reply::decided(
                json!({ "max_tb_component": top, "max_component_tb_sum": sum }),
                "Above the tb̄ slope the maximal cable has tb = pq - |p·tb̄ - q|; below it tb = pq for p > 1; for integral slopes below tb̄ the component sum is at most nq.",
            )
        }
    })
}

fn front_body(f: &FrontWord, out: &Output) -> Result<Value, Failure> {
    let mut body = json!({
        "front": f,
        "event_count": f.len(),
        "components": f.invariants(),
        "linking": f.linking_matrix(),
    });
    if let Some(path) = &out.svg {
        std::fs::write(path, fronts::render_svg(f))?;
        body["svg"] = json!(path.display().to_string());
    }
    if out.ascii {
        body["ascii"] = json!(fronts::render_ascii(f));
    }
    Ok(body)
}

fn builtin_name(k: &KnotArg) -> Result<&str, Failure> {
    k.knot.as_deref().ok_or_else(|| Failure::new("front", "fronts are only available for built-in knot types"))
}

/// A class of `k` at the given tb: `r` if given, otherwise the class
/// reached from the first peak by alternating stabilizations.
fn pick_class(k: &KnotTypeData, tb: i64, r: Option<i64>) -> Result<Invariants, Failure> {
    let c = match r {
        Some(r) => Invariants::new(tb, r),
        None => {
            let peak = k.range().peaks()[0];
            Invariants::new(tb, peak.r + (peak.tb - tb).rem_euclid(2))
        }
    };
    if k.range().contains(c.tb, c.r) {
        Ok(c)
    } else {
        Err(Failure::new("range", format!("{c} is not a class of {}", k.name())))
    }
}

fn front_cmd(c: &FrontCmd) -> CmdResult {
    Ok(match c {
        FrontCmd::Cable { spec, kind, base_r, out } => {
            let (k, cspec) = cable_spec(spec)?;
            let name = builtin_name(&spec.knot)?;
            let (_, base_tb) = cables::standard_twisting(&k, &cspec);
            let base = pick_class(&k, base_tb, *base_r)?;
            let f = fronts::standard_cable_front(&fronts::knot_front(name, base)?, &cspec, k.tb_bar(), *kind)?;
            let regime = cables::slope_regime(&k, &cspec);
            let mut body = front_body(&f, out)?;
            body["regime"] = json!(regime);
            body["base"] = json!(base);
            Reply::decided(body, regime_explain(regime))
        }
        FrontCmd::Torus { spec, rot, out } => {
            let (n, p, q) = (spec.n, spec.p, spec.q);
            let f = match spec.sign {
                Sign::Pos => fronts::positive_torus_link_front(n, p, q)?,
                Sign::Neg => {
                    let range = crate::mountain::torus_knot_range(p, q, Sign::Neg)?;
                    let r0 = rot.unwrap_or(range.peaks()[0].r);
                    let knot = if p == 1 {
                        fronts::stabilize_to(&fronts::unknot_front(), Invariants::new(-q, r0))?
                    } else {
                        fronts::negative_torus_knot_front(p, q, r0)?
                    };
                    fronts::n_copy(&knot, n)?
                }
            };
            Reply::decided(
                front_body(&f, out)?,
                "Positive links: np nested maximal unknots closed with nq positive tangles. Negative links: the n-copy of a maximal tb component.",
            )
        }
        FrontCmd::Twisted { knot, n, t, tb, r, out } => {
            let k = load_knot(knot)?;
            let name = builtin_name(knot)?;
            let base = pick_class(&k, tb.unwrap_or(k.tb_bar()), *r)?;
            let f = fronts::twisted_n_copy(&fronts::knot_front(name, base)?, *n, *t)?;
            Reply::decided(
                front_body(&f, out)?,
                "The t-twisted n-copy: one component keeps the invariants of the base class, the others lose 2t in tb.",
            )
        }
        FrontCmd::Invariants { input } => {
            let f = load_front(input)?;
            Reply::decided(
                front_body(&f, &Output { svg: None, ascii: false })?,
                "tb = writhe - right cusps, r = (down cusps - up cusps)/2, lk = half the signed crossings between components.",
            )
        }
        FrontCmd::Render { input, format } => {
            let f = load_front(input)?;
            let text = match format.as_str() {
                "svg" => fronts::render_svg(&f),
                "ascii" => fronts::render_ascii(&f),
                other => return Err(Failure::new("usage", format!("format must be svg or ascii, got {other:?}"))),
            };
            Reply { code: EXIT_DECIDED, body: Value::Null, explain: String::new(), raw: Some(text) }
        }
    })
}
