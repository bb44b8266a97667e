use std::fmt::Write as _;
use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use quiver_cover::covering::Covering;
use quiver_cover::functors::push_down;
use quiver_cover::knit::list_indecomposables;
use quiver_cover::module::FDModule;
use quiver_cover::report::{Claim, Verdict, VerificationReport};
use quiver_cover::structure::{is_injective, is_projective};
use quiver_cover::subcategory::{Carrier, SubcategorySpec};
use quiver_cover::suite::{default_half_width, run_claim, run_suite, SuiteOptions};
use quiver_cover::tilting::TiltingContext;
use quiver_cover::transfer::match_pushdowns;
use quiver_cover::{load_presentation, AnyPresentation, Error, Field, GradedQuiverPresentation};
use serde_json::{json, Value};

use crate::{Command, Format, Global};

/// What a command produced: the rendered JSON document, its text rendering and the exit code.
struct Output {
    json: String,
    text: String,
    code: i32,
}

impl Output {
    fn new(json: &Value, text: String, code: i32) -> Self {
        Self { json: serde_json::to_string_pretty(json).expect("values serialize"), text, code }
    }

    fn ok(json: Value, text: String) -> Self {
        Self::new(&json, text, 0)
    }
}

/// Typed name and exit code for an error that escaped a command.
pub fn classify(err: &anyhow::Error) -> (&'static str, i32) {
    match err.downcast_ref::<Error>() {
        Some(
            e @ (Error::CapExceeded(_)
            | Error::WindowTooSmall(_)
            | Error::DecompositionInconclusive(_)
            | Error::IsoInconclusive(_)
            | Error::HypothesisUnverified(_)
            | Error::NotSquareFree(_)
            | Error::AmbientNotClusterTilting(_)),
        ) => (e.kind(), 3),
        Some(e) => (e.kind(), 2),
        None => ("UsageError", 2),
    }
}

pub fn run(cmd: &Command, g: &Global) -> Result<i32> {
    let path = g.input.as_ref().ok_or_else(|| anyhow!("--input is required"))?;
    let doc = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let pres = load_presentation(&doc)?;
    let out = match &pres {
        AnyPresentation::Prime(p) => dispatch(cmd, g, p)?,
        AnyPresentation::Rational(p) => dispatch(cmd, g, p)?,
    };
    let rendered = match g.format {
        Format::Json => out.json + "\n",
        Format::Text => out.text,
    };
    match &g.out {
        Some(file) => fs::write(file, rendered).with_context(|| format!("writing {}", file.display()))?,
        None => print!("{rendered}"),
    }
    Ok(out.code)
}

fn dispatch<F: Field>(cmd: &Command, g: &Global, pres: &GradedQuiverPresentation<F>) -> Result<Output> {
    let window = |n: usize| g.window.unwrap_or_else(|| default_half_width(pres, n));
    match cmd {
        Command::Validate => Ok(validate(pres)),
        Command::Orbit { n } => orbit(pres, window(*n), g.cap),
        Command::Pushdown { n } => pushdown(pres, window(*n), g.cap),
        Command::Indecs => indecs(pres, g.cap),
        Command::Check { claim, n } => {
            let claim = parse_claim(claim)?;
            let r = run_claim(claim, pres, &options(pres, *n, window(*n), g))?;
            Ok(Output { json: r.to_json_string(), text: report_line(&r) + "\n", code: r.pass.exit_code() })
        }
        Command::Suite { claims, all, n } => {
            let claims = if *all {
                Claim::ALL.to_vec()
            } else if claims.is_empty() {
                bail!("suite needs --all or at least one --claim");
            } else {
                claims.iter().map(|c| parse_claim(c)).collect::<Result<Vec<_>>>()?
            };
            let reports = run_suite(pres, &claims, &options(pres, *n, window(*n), g))?;
            Ok(suite_output(&reports))
        }
        Command::EnumerateTilting { n } => enumerate_tilting(pres, *n, g.cap),
    }
}

fn parse_claim(s: &str) -> Result<Claim> {
    Claim::parse(s).ok_or_else(|| {
        let names: Vec<_> = Claim::ALL.iter().map(|c| c.name()).collect();
        anyhow!("unknown claim {s}; expected one of {}", names.join(", "))
    })
}

fn options<F: Field>(pres: &GradedQuiverPresentation<F>, n: usize, half_width: i64, g: &Global) -> SuiteOptions {
    SuiteOptions { half_width, dimcap: g.cap, seed: g.seed, ..SuiteOptions::default_for(pres, n) }
}

fn report_line(r: &VerificationReport) -> String {
    format!("{:<16} {:<15} {} witnesses", r.claim.name(), r.pass.to_string(), r.witnesses.len())
}

fn suite_output(reports: &[VerificationReport]) -> Output {
    let verdict = reports.iter().fold(Verdict::Pass, |v, r| v.and(r.pass));
    let count = |v: Verdict| reports.iter().filter(|r| r.pass == v).count();
    let summary = format!(
        "summary: {} claims, {} pass, {} fail, {} not-applicable, {} indeterminate",
        reports.len(),
        count(Verdict::Pass),
        count(Verdict::Fail),
        count(Verdict::NotApplicable),
        count(Verdict::Indeterminate)
    );
    let mut text = String::new();
    for r in reports {
        let _ = writeln!(text, "{}", report_line(r));
    }
    let _ = writeln!(text, "{summary}");
    Output::new(&json!({ "reports": reports, "summary": summary, "pass": verdict }), text, verdict.exit_code())
}

fn validate<F: Field>(pres: &GradedQuiverPresentation<F>) -> Output {
    let json = json!({
        "valid": true,
        "field": pres.field().spec(),
        "group": pres.group(),
        "vertices": pres.vertices(),
        "arrows": pres.arrows().len(),
        "relations": pres.relations().len(),
        "nilbound": pres.nilbound(),
        "square_free": pres.is_square_free(),
        "dimension": pres.algebra().total_dim(),
    });
    let text = format!(
        "valid: {} vertices, {} arrows, {} relations, dimension {}\n",
        pres.vertices().len(),
        pres.arrows().len(),
        pres.relations().len(),
        pres.algebra().total_dim()
    );
    Output::ok(json, text)
}

/// Nonzero entries of a dimension vector, keyed by vertex name.
fn support_json<F: Field>(m: &FDModule<F>) -> Value {
    let alg = m.algebra();
    let map: serde_json::Map<String, Value> =
        m.support().into_iter().map(|v| (alg.vertex_name(v).to_string(), json!(m.dim(v)))).collect();
    Value::Object(map)
}

fn orbit<F: Field>(pres: &GradedQuiverPresentation<F>, half_width: i64, cap: usize) -> Result<Output> {
    let cover = Covering::new(pres, half_width)?;
    let up = Carrier::Cover(&cover);
    let reps = up.pool(cap)?;
    let mut text = String::new();
    let entries: Vec<Value> = reps
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let twists = up.twists_of(m).len();
            let _ = writeln!(text, "{i}: {} (dim {}, {twists} twists in window)", support_json(m), m.total_dim());
            json!({ "index": i, "dims": support_json(m), "total_dim": m.total_dim(), "twists_in_window": twists })
        })
        .collect();
    let _ = writeln!(text, "{} orbits", reps.len());
    Ok(Output::ok(json!({ "window": half_width, "dimcap": cap, "orbits": entries }), text))
}

fn pushdown<F: Field>(pres: &GradedQuiverPresentation<F>, half_width: i64, cap: usize) -> Result<Output> {
    let cover = Covering::new(pres, half_width)?;
    let ups = Carrier::Cover(&cover).pool(cap)?;
    let downs = list_indecomposables(pres.algebra(), cap)?;
    let (image, bijective) = match_pushdowns(&cover, &ups, &downs)?;
    let mut text = String::new();
    let mut entries = Vec::new();
    for (i, (m, hit)) in ups.iter().zip(&image).enumerate() {
        let down = push_down(&cover, m)?;
        let _ = writeln!(text, "{i}: {:?} -> base {}", down.dims(), hit.map_or("none".into(), |k| k.to_string()));
        entries.push(json!({ "orbit": i, "dims": support_json(m), "pushdown": down.dims(), "base_index": hit }));
    }
    let _ = writeln!(text, "bijective: {bijective} ({} orbits, {} base indecomposables)", ups.len(), downs.len());
    let json =
        json!({ "window": half_width, "dimcap": cap, "orbits": entries, "base": downs.len(), "bijective": bijective });
    Ok(Output::new(&json, text, Verdict::from_bool(bijective).exit_code()))
}

fn indecs<F: Field>(pres: &GradedQuiverPresentation<F>, cap: usize) -> Result<Output> {
    let list = list_indecomposables(pres.algebra(), cap)?;
    let mut text = String::new();
    let mut entries = Vec::new();
    for (i, m) in list.iter().enumerate() {
        let (p, q) = (is_projective(m)?, is_injective(m)?);
        let _ = writeln!(
            text,
            "{i}: {:?}{}{}",
            m.dims(),
            if p { " projective" } else { "" },
            if q { " injective" } else { "" }
        );
        entries.push(json!({ "index": i, "dims": m.dims(), "projective": p, "injective": q }));
    }
    let _ = writeln!(text, "{} indecomposables", list.len());
    Ok(Output::ok(json!({ "dimcap": cap, "indecomposables": entries }), text))
}

fn enumerate_tilting<F: Field>(pres: &GradedQuiverPresentation<F>, n: usize, cap: usize) -> Result<Output> {
    let c = Carrier::Base(pres.algebra());
    let pool = list_indecomposables(pres.algebra(), cap)?;
    let ambient = SubcategorySpec::new(&c, pool.clone())?;
    let ctx = TiltingContext::new(c, ambient, n, &pool)?;
    let pairs = ctx.enumerate_indices()?;
    let mut text = String::new();
    let entries: Vec<Value> = pairs
        .iter()
        .map(|(ms, ps)| {
            let _ = writeln!(text, "modules {ms:?} projectives {ps:?}");
            json!({ "modules": ms, "projectives": ps, "pair": ctx.pair(&(ms.clone(), ps.clone())).to_json() })
        })
        .collect();
    let _ = writeln!(text, "{} support tau_{n}-tilting pairs", pairs.len());
    let json = json!({
        "n": n,
        "modules": pool.iter().map(|m| m.dims().to_vec()).collect::<Vec<_>>(),
        "pairs": entries,
        "count": pairs.len(),
    });
    Ok(Output::ok(json, text))
}
