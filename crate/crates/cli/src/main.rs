use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eqschubert::expr::{parse_polynomial, render, Coords, Style};
use eqschubert::polynomial::t_linear;
use eqschubert::presentations::{
    billey_localize, borel_to_gkm, borel_to_schubert, dd_word, double_schubert, factor_decompositions, gkm_graph_dot,
    gkm_to_borel, gkm_to_schubert, schubert_to_borel, schubert_to_gkm, sigma_up_to_length, BorelClass, GkmClass,
    LocalizationCache, SchubertSum, SigmaTable, DEFAULT_GROUP_BOUND,
};
use eqschubert::store::{ArtifactKind, CacheKey, Lookup, Store};
use eqschubert::structconst::{
    check_graham_positivity, multiply_via_borel, multiply_via_gkm, specialize_ordinary, Method, StructConstResult,
};
use eqschubert::{Error, RootSystem, WeylElement, Word};

#[derive(Parser, Debug)]
#[command(name = "eqschubert", version, about = "Equivariant Schubert calculus on flag manifolds G/T")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Polynomial coordinates: `canonical` (fundamental weights) or `zA` (type A only).
    #[arg(long, global = true, default_value = "canonical")]
    coords: String,

    /// Render t-variables as simple roots `a_i` and x-variables as `ax_i`.
    #[arg(long, global = true)]
    alpha: bool,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Cache directory (default: $EQSCHUBERT_CACHE_DIR, then the per-user cache).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Do not read or write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Presentation {
    Schubert,
    Gkm,
    Borel,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Gkm,
    Borel,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan matrix, simple and positive roots.
    Roots {
        #[arg(long = "type", short = 't')]
        cartan_type: String,
    },
    /// Convert a class between the Schubert, GKM and Borel presentations.
    Convert {
        #[arg(long = "type", short = 't')]
        cartan_type: String,
        #[arg(long, value_enum)]
        from: Presentation,
        #[arg(long, value_enum)]
        to: Presentation,
        /// Vertex-set cutoff for GKM classes (defaults to all of W when small enough).
        #[arg(long)]
        cutoff: Option<usize>,
        /// Read the class from this file (`-` for standard input).
        #[arg(long, conflicts_with = "class")]
        input: Option<PathBuf>,
        /// The class given inline.
        #[arg(long)]
        class: Option<String>,
    },
    /// Apply the divided difference along a reduced word to a class.
    Dd {
        #[arg(long = "type", short = 't')]
        cartan_type: String,
        #[arg(long, value_enum)]
        presentation: Presentation,
        /// Reduced word, e.g. `s1s2` or `1,2`.
        word: String,
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long, conflicts_with = "class")]
        input: Option<PathBuf>,
        #[arg(long)]
        class: Option<String>,
    },
    /// The localization X_w(v) of a Schubert class at a fixed point.
    Localize {
        #[arg(long = "type", short = 't')]
        cartan_type: String,
        w: String,
        v: String,
    },
    /// Expand X_u X_v in Schubert classes.
    Multiply {
        #[arg(long = "type", short = 't')]
        cartan_type: String,
        u: String,
        v: String,
        #[arg(long, value_enum, default_value = "gkm")]
        method: MethodArg,
        /// Also print the sigma representatives used by the Borel method.
        #[arg(long)]
        show_sigma: bool,
    },
    /// The double Schubert polynomial S_w(t; x).
    DoubleSchubert {
        #[arg(long = "type", short = 't')]
        cartan_type: String,
        w: String,
    },
    /// Length-additive factorizations of w into k non-identity factors.
    Factor {
        #[arg(long = "type", short = 't')]
        cartan_type: String,
        w: String,
        k: usize,
    },
    /// Representatives sigma_w of ordinary Schubert classes up to a length.
    Sigma {
        #[arg(long = "type", short = 't')]
        cartan_type: String,
        #[arg(long)]
        max_length: usize,
    },
    /// The GKM graph in DOT format.
    GkmGraph {
        #[arg(long = "type", short = 't')]
        cartan_type: String,
        #[arg(long)]
        cutoff: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

struct Ctx {
    rs: RootSystem,
    style: Style,
    store: Option<Store>,
}

impl Ctx {
    fn poly(&self, p: &eqschubert::DoublePolynomial) -> String {
        render(&self.rs, p, self.style)
    }

    fn word(&self, w: &WeylElement) -> Word {
        self.rs.reduced_word(w)
    }

    fn element(&self, text: &str) -> Result<WeylElement, Failure> {
        self.rs.parse_element(text).map_err(usage)
    }

    /// Cached computation of a canonical-coordinate text payload.
    fn cached(
        &self,
        kind: ArtifactKind,
        words: Vec<String>,
        compute: impl FnOnce() -> Result<String, Error>,
    ) -> Result<String, Failure> {
        let Some(store) = &self.store else { return Ok(compute()?) };
        let key = CacheKey::new(self.rs.cartan_type().to_string(), kind, words);
        if let Lookup::Corrupt(path) = store.get(&key) {
            eprintln!("warning: ignoring corrupt cache entry {}", path.display());
        }
        Ok(store.get_or_compute(&key, compute)?)
    }

    fn default_cutoff(&self, cutoff: Option<usize>) -> Result<usize, Failure> {
        match cutoff {
            Some(c) => Ok(c),
            None if self.rs.weyl_order() <= DEFAULT_GROUP_BOUND => Ok(self.rs.positive_roots().len()),
            None => Err(Failure::Usage(format!(
                "|W({})| = {} is too large to enumerate; pass --cutoff",
                self.rs.cartan_type(),
                self.rs.weyl_order()
            ))),
        }
    }

    fn sigma(&self, max_length: usize) -> Result<SigmaTable, Failure> {
        let text = self.cached(ArtifactKind::Sigma, vec![format!("max-length={max_length}")], || {
            Ok(sigma_up_to_length(&self.rs, max_length)?.to_text(&self.rs, Style::default()))
        })?;
        Ok(SigmaTable::parse_text(&self.rs, &text, Coords::Canonical)?)
    }
}

enum Class {
    Schubert(SchubertSum),
    Gkm(GkmClass),
    Borel(BorelClass),
}

fn read_input(input: Option<&PathBuf>, class: Option<&String>) -> Result<String, Failure> {
    if let Some(c) = class {
        return Ok(c.replace("\\n", "\n").replace(';', "\n"));
    }
    match input {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn parse_class(ctx: &Ctx, from: Presentation, text: &str, cutoff: Option<usize>) -> Result<Class, Failure> {
    let coords = ctx.style.coords;
    Ok(match from {
        Presentation::Schubert => Class::Schubert(SchubertSum::parse_text(&ctx.rs, text, coords).map_err(usage)?),
        Presentation::Gkm => Class::Gkm(GkmClass::parse_text(&ctx.rs, text, coords, cutoff).map_err(usage)?),
        Presentation::Borel => {
            let body: String = text.lines().filter(|l| !l.trim_start().starts_with('#')).collect::<Vec<_>>().join(" ");
            Class::Borel(BorelClass::new(parse_polynomial(&body, &ctx.rs, coords).map_err(usage)?))
        }
    })
}

fn schubert_json(ctx: &Ctx, s: &SchubertSum) -> Value {
    Value::Array(
        s.sorted_terms(&ctx.rs)
            .into_iter()
            .map(|(w, _, c)| json!({"word": w.to_string(), "coefficient": ctx.poly(c)}))
            .collect(),
    )
}

fn emit_class(ctx: &Ctx, class: &Class, as_json: bool) -> String {
    let ty = ctx.rs.cartan_type().to_string();
    match (class, as_json) {
        (Class::Schubert(s), false) => s.to_text(&ctx.rs, ctx.style),
        (Class::Gkm(h), false) => h.to_text(&ctx.rs, ctx.style),
        (Class::Borel(b), false) => b.to_text(&ctx.rs, ctx.style),
        (Class::Schubert(s), true) => {
            json!({"type": ty, "presentation": "schubert", "terms": schubert_json(ctx, s)}).to_string() + "\n"
        }
        (Class::Gkm(h), true) => {
            let mut rows: Vec<_> = h.iter().map(|(w, p)| (ctx.rs.sort_key(w), p)).collect();
            rows.sort_by(|a, b| a.0.cmp(&b.0));
            let vertices: Vec<Value> =
                rows.into_iter().map(|((_, w), p)| json!({"word": w.to_string(), "value": ctx.poly(p)})).collect();
            json!({"type": ty, "presentation": "gkm", "cutoff": h.cutoff(), "vertices": vertices}).to_string() + "\n"
        }
        (Class::Borel(b), true) => {
            json!({"type": ty, "presentation": "borel", "polynomial": ctx.poly(&b.rep)}).to_string() + "\n"
        }
    }
}

fn max_length(s: &SchubertSum) -> usize {
    s.iter().map(|(w, _)| w.length()).max().unwrap_or(0)
}

fn convert(ctx: &Ctx, class: Class, to: Presentation, cutoff: Option<usize>) -> Result<Class, Failure> {
    let rs = &ctx.rs;
    Ok(match (class, to) {
        (c @ Class::Schubert(_), Presentation::Schubert) | (c @ Class::Borel(_), Presentation::Borel) => c,
        (Class::Gkm(h), Presentation::Gkm) => match cutoff {
            Some(l) if l != h.cutoff() => {
                Class::Gkm(schubert_to_gkm(rs, &gkm_to_schubert(rs, &h)?, l, &mut LocalizationCache::new())?)
            }
            _ => Class::Gkm(h),
        },
        (Class::Schubert(s), Presentation::Gkm) => {
            Class::Gkm(schubert_to_gkm(rs, &s, ctx.default_cutoff(cutoff)?, &mut LocalizationCache::new())?)
        }
        (Class::Schubert(s), Presentation::Borel) => {
            let sigma = ctx.sigma(max_length(&s))?;
            Class::Borel(schubert_to_borel(rs, &s, &sigma)?)
        }
        (Class::Gkm(h), Presentation::Schubert) => Class::Schubert(gkm_to_schubert(rs, &h)?),
        (Class::Gkm(h), Presentation::Borel) => {
            let s = gkm_to_schubert(rs, &h)?;
            let sigma = ctx.sigma(max_length(&s))?;
            Class::Borel(gkm_to_borel(rs, &h, &sigma)?)
        }
        (Class::Borel(f), Presentation::Schubert) => Class::Schubert(borel_to_schubert(rs, &f)?),
        (Class::Borel(f), Presentation::Gkm) => Class::Gkm(borel_to_gkm(rs, &f, ctx.default_cutoff(cutoff)?)?),
    })
}

fn multiply(ctx: &Ctx, u: &WeylElement, v: &WeylElement, method: Method) -> Result<StructConstResult, Failure> {
    let rs = &ctx.rs;
    // Key on the unordered pair: the product is commutative.
    let mut pair = [ctx.word(u).to_string(), ctx.word(v).to_string()];
    pair.sort();
    let text = ctx.cached(
        ArtifactKind::StructConst,
        vec![pair[0].clone(), pair[1].clone(), format!("method={method}")],
        || {
            let r = match method {
                Method::Gkm => multiply_via_gkm(rs, u, v, &mut LocalizationCache::new())?,
                Method::Borel => {
                    let sigma = sigma_up_to_length(rs, u.length().max(v.length()))?;
                    multiply_via_borel(rs, u, v, &sigma)?
                }
            };
            Ok(r.expansion.to_text(rs, Style::default()))
        },
    )?;
    let expansion = SchubertSum::parse_text(rs, &text, Coords::Canonical)?;
    Ok(StructConstResult { u: u.clone(), v: v.clone(), expansion, method })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let coords: Coords = cli.coords.parse().map_err(usage)?;
    let style = Style { coords, alpha: cli.alpha };
    let cartan_type = match &cli.command {
        Command::Roots { cartan_type }
        | Command::Convert { cartan_type, .. }
        | Command::Dd { cartan_type, .. }
        | Command::Localize { cartan_type, .. }
        | Command::Multiply { cartan_type, .. }
        | Command::DoubleSchubert { cartan_type, .. }
        | Command::Factor { cartan_type, .. }
        | Command::Sigma { cartan_type, .. }
        | Command::GkmGraph { cartan_type, .. } => cartan_type,
    };
    let rs = RootSystem::from_type_str(cartan_type).map_err(usage)?;
    if coords == Coords::TypeA && rs.cartan_type().family != eqschubert::Family::A {
        return Err(Failure::Usage(format!("--coords zA needs type A, not {}", rs.cartan_type())));
    }
    let store = if cli.no_cache {
        None
    } else {
        match cli.cache_dir.clone().or_else(Store::default_dir) {
            Some(dir) => match Store::open(&dir) {
                Ok(s) => Some(s),
                Err(e) => {
                    eprintln!("warning: cache disabled ({}: {e})", dir.display());
                    None
                }
            },
            None => None,
        }
    };
    let ctx = Ctx { rs, style, store };
    let rs = &ctx.rs;

    match &cli.command {
        Command::Roots { .. } => {
            if cli.json {
                let roots: Vec<Value> = rs
                    .positive_roots()
                    .iter()
                    .map(|b| json!({"root": b.to_string(), "form": ctx.poly(&t_linear(rs, b))}))
                    .collect();
                return Ok(json!({
                    "type": rs.cartan_type().to_string(),
                    "rank": rs.rank(),
                    "cartan_matrix": rs.cartan_matrix(),
                    "weyl_order": rs.weyl_order().to_string(),
                    "positive_roots": roots,
                })
                .to_string()
                    + "\n");
            }
            let mut out = format!("type: {}\nrank: {}\ncartan matrix:\n", rs.cartan_type(), rs.rank());
            for row in rs.cartan_matrix() {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
                out.push_str(&format!("{}\n", cells.join("")));
            }
            out.push_str(&format!("weyl group order: {}\n", rs.weyl_order()));
            out.push_str(&format!("positive roots ({}):\n", rs.positive_roots().len()));
            for b in rs.positive_roots() {
                out.push_str(&format!("  {b}: {}\n", ctx.poly(&t_linear(rs, b))));
            }
            Ok(out)
        }
        Command::Convert { from, to, cutoff, input, class, .. } => {
            let text = read_input(input.as_ref(), class.as_ref())?;
            let parsed = parse_class(&ctx, *from, &text, *cutoff)?;
            let out = convert(&ctx, parsed, *to, *cutoff)?;
            Ok(emit_class(&ctx, &out, cli.json))
        }
        Command::Dd { presentation, word, cutoff, input, class, .. } => {
            let word: Word = word.parse().map_err(usage)?;
            if !rs.is_reduced(&word).map_err(usage)? {
                return Err(Failure::Usage(format!("{word} is not a reduced word")));
            }
            let text = read_input(input.as_ref(), class.as_ref())?;
            let out = match parse_class(&ctx, *presentation, &text, *cutoff)? {
                Class::Schubert(s) => Class::Schubert(dd_word(rs, &word, &s)?),
                Class::Gkm(h) => Class::Gkm(dd_word(rs, &word, &h)?),
                Class::Borel(f) => Class::Borel(dd_word(rs, &word, &f)?),
            };
            Ok(emit_class(&ctx, &out, cli.json))
        }
        Command::Localize { w, v, .. } => {
            let (w, v) = (ctx.element(w)?, ctx.element(v)?);
            let text = ctx.cached(
                ArtifactKind::Localization,
                vec![ctx.word(&w).to_string(), ctx.word(&v).to_string()],
                || Ok(billey_localize(rs, &w, &v).to_string()),
            )?;
            let p = parse_polynomial(&text, rs, Coords::Canonical)?;
            if cli.json {
                let (w, v) = (ctx.word(&w).to_string(), ctx.word(&v).to_string());
                return Ok(json!({"w": w, "v": v, "value": ctx.poly(&p)}).to_string() + "\n");
            }
            Ok(format!("{}\n", ctx.poly(&p)))
        }
        Command::Multiply { u, v, method, show_sigma, .. } => {
            let (u, v) = (ctx.element(u)?, ctx.element(v)?);
            let methods: &[Method] = match method {
                MethodArg::Gkm => &[Method::Gkm],
                MethodArg::Borel => &[Method::Borel],
                MethodArg::Both => &[Method::Gkm, Method::Borel],
            };
            let results = methods.iter().map(|&m| multiply(&ctx, &u, &v, m)).collect::<Result<Vec<_>, _>>()?;
            if results.windows(2).any(|p| p[0].expansion != p[1].expansion) {
                return Err(Failure::Compute("the GKM and Borel methods disagree".into()));
            }
            let r = &results[0];
            let violations = check_graham_positivity(rs, r);
            let ordinary = specialize_ordinary(rs, r)?;
            let sigma_rows: Vec<(String, String)> = if *show_sigma {
                let sigma = ctx.sigma(u.length().max(v.length()))?;
                let mut rows: Vec<_> = sigma
                    .iter()
                    .filter(|(w, _)| (w.length() > 0) && (rs.bruhat_leq(w, &u) || rs.bruhat_leq(w, &v)))
                    .map(|(w, p)| (rs.sort_key(w), ctx.poly(p)))
                    .collect();
                rows.sort();
                rows.into_iter().map(|((_, w), p)| (w.to_string(), p)).collect()
            } else {
                Vec::new()
            };
            if cli.json {
                let ordinary: Vec<Value> =
                    ordinary.iter().map(|(w, k)| json!({"word": w.to_string(), "value": k.to_string()})).collect();
                let sigma: Vec<Value> = sigma_rows.iter().map(|(w, p)| json!({"word": w, "sigma": p})).collect();
                let names: Vec<String> = methods.iter().map(Method::to_string).collect();
                let violations: Vec<Value> = violations
                    .iter()
                    .map(|x| json!({"word": x.word.to_string(), "coefficient": x.coefficient}))
                    .collect();
                return Ok(json!({
                    "type": rs.cartan_type().to_string(),
                    "u": ctx.word(&u).to_string(),
                    "v": ctx.word(&v).to_string(),
                    "methods": names,
                    "terms": schubert_json(&ctx, &r.expansion),
                    "ordinary": ordinary,
                    "positivity_violations": violations,
                    "sigma": sigma,
                })
                .to_string()
                    + "\n");
            }
            let mut out = String::new();
            for (w, p) in &sigma_rows {
                out.push_str(&format!("# sigma {w}: {p}\n"));
            }
            out.push_str(&r.expansion.to_text(rs, ctx.style));
            for x in &violations {
                eprintln!("warning: negative coefficient at {}: {}", x.word, x.coefficient);
            }
            Ok(out)
        }
        Command::DoubleSchubert { w, .. } => {
            let w = ctx.element(w)?;
            let text = ctx.cached(ArtifactKind::DoubleSchubert, vec![ctx.word(&w).to_string()], || {
                let sigma = sigma_up_to_length(rs, w.length())?;
                Ok(double_schubert(rs, &w, &sigma)?.rep.to_string())
            })?;
            let f = BorelClass::new(parse_polynomial(&text, rs, Coords::Canonical)?);
            Ok(emit_class(&ctx, &Class::Borel(f), cli.json))
        }
        Command::Factor { w, k, .. } => {
            let w = ctx.element(w)?;
            if *k > w.length() {
                return Err(Failure::Usage(format!("k = {k} exceeds l(w) = {}", w.length())));
            }
            let rows: Vec<Vec<String>> = factor_decompositions(rs, &w, *k)
                .iter()
                .map(|f| f.iter().map(|x| ctx.word(x).to_string()).collect())
                .collect();
            if cli.json {
                return Ok(json!({"w": ctx.word(&w).to_string(), "k": k, "factorizations": rows}).to_string() + "\n");
            }
            Ok(rows.iter().map(|r| format!("({})\n", r.join(","))).collect())
        }
        Command::Sigma { max_length, .. } => {
            let sigma = ctx.sigma(*max_length)?;
            if cli.json {
                let mut rows: Vec<_> = sigma.iter().map(|(w, p)| (rs.sort_key(w), ctx.poly(p))).collect();
                rows.sort();
                let rows: Vec<Value> =
                    rows.into_iter().map(|((_, w), p)| json!({"word": w.to_string(), "sigma": p})).collect();
                return Ok(json!({"source": sigma.source().to_string(), "entries": rows}).to_string() + "\n");
            }
            Ok(sigma.to_text(rs, ctx.style))
        }
        Command::GkmGraph { cutoff, .. } => Ok(gkm_graph_dot(rs, ctx.default_cutoff(*cutoff)?, ctx.style)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, out.as_bytes()),
                None => io::stdout().write_all(out.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
