//! Command-line surface: every library operation behind a subcommand, with
//! canonical JSON output (sorted keys, exact rational strings) and a plain
//! table mode for quick inspection.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::blocks::{self, BlockKey};
use crate::characters::{self, GClass, KostantCounter};
use crate::error::Error;
use crate::jantzen::{
    self, AlphaFiniteness, BlockReport, ConstituentForm, JantzenReport, JantzenStatus,
    WitnessCertificate,
};
use crate::kl::KlTable;
use crate::odd_reflections::{self, OddReflectionTrace, StepKind};
use crate::structure::{make_context, RankContext};
use crate::weights::{self, DominanceClass, Typicality, Weight};
use crate::weyl::{self, WeylElem};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(name = "peo", version, about = "Block and Jantzen-middle combinatorics for pe(n)")]
pub struct Cli {
    /// Output format; overrides the PEO_FORMAT environment variable.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Kazhdan-Lusztig cache file; overrides PEO_KL_CACHE.
    #[arg(long, global = true)]
    pub kl_cache: Option<PathBuf>,
    /// Disable the Kazhdan-Lusztig cache entirely.
    #[arg(long, global = true)]
    pub no_kl_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct WeightArg {
    /// Rank n.
    #[arg(long)]
    pub n: usize,
    /// Comma-separated rational coordinates, e.g. "0,2" or "1/2,-3".
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    #[command(subcommand)]
    Weight(WeightCmd),
    #[command(subcommand)]
    Weyl(WeylCmd),
    #[command(subcommand)]
    Char(CharCmd),
    #[command(subcommand)]
    Block(BlockCmd),
    #[command(subcommand)]
    Oddref(OddrefCmd),
    #[command(subcommand)]
    Jantzen(JantzenCmd),
}

#[derive(Subcommand, Debug)]
pub enum WeightCmd {
    /// Typicality and the value of T(lambda).
    Typical(WeightArg),
    /// Dominance classification of lambda.
    Dominance(WeightArg),
    /// Dot action of a reduced word on lambda.
    Dot {
        #[command(flatten)]
        base: WeightArg,
        /// Comma-separated simple reflection indices; empty for the identity.
        #[arg(long, default_value = "")]
        word: String,
    },
    /// The involution -w_0(lambda).
    Hat(WeightArg),
    /// Highest-weight order: is weight <= other?
    Leq {
        #[command(flatten)]
        base: WeightArg,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum WeylCmd {
    /// Kazhdan-Lusztig polynomial P_{x,y} from reduced words.
    Kl {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        x: String,
        #[arg(long, default_value = "")]
        y: String,
    },
    /// Bruhat order comparison from reduced words.
    Bruhat {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        x: String,
        #[arg(long, default_value = "")]
        y: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CharCmd {
    /// Expand the super Verma module into g0-Vermas.
    SuperExpand(WeightArg),
    /// Expand K(L(lambda)) into g0-Vermas.
    SimpleExpand(WeightArg),
    /// Weight multiplicity of nu in the super Verma of highest weight lambda.
    Mult {
        #[command(flatten)]
        base: WeightArg,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum BlockCmd {
    /// Block key of a weight.
    Classify(WeightArg),
    /// Are two weights in the same block?
    Same {
        #[command(flatten)]
        base: WeightArg,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
    /// All block keys of integer weights in a box.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long = "box")]
        radius: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum OddrefCmd {
    /// Transport a highest weight along the Borel chain, with the full trace.
    Trace {
        #[command(flatten)]
        base: WeightArg,
        /// Subtract (n-1) omega_n first: the trace then ends at the socle
        /// weight of the Kac module.
        #[arg(long)]
        shift_kac: bool,
    },
    /// Highest weight of the socle of K(L(mu)).
    SocleKac(WeightArg),
}

#[derive(Subcommand, Debug)]
pub enum JantzenCmd {
    /// Jantzen middle report for (lambda, alpha_i).
    Middle {
        #[command(flatten)]
        base: WeightArg,
        /// Simple root index i, meaning e_i - e_{i+1}.
        #[arg(long)]
        alpha: usize,
    },
    /// Witness certificate for the (atypical) block of a weight.
    Witness(WeightArg),
    /// Per-block verdict; sweeps the distinguished blocks when no weight is
    /// given.
    Report {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
}

fn rational_str(r: &crate::Rat) -> String {
    r.to_string()
}

fn weight_json(w: &Weight) -> Value {
    Value::Array(w.coords().iter().map(|c| json!(rational_str(c))).collect())
}

fn gclass_json(cls: &GClass) -> Value {
    Value::Array(
        cls.terms()
            .map(|(w, c)| {
                json!({
                    "basis": cls.basis().to_string(),
                    "coefficient": c,
                    "weight": weight_json(w),
                })
            })
            .collect(),
    )
}

fn block_key_json(key: &BlockKey) -> Value {
    json!({
        "n": key.rank(),
        "residues": key.residues().iter().map(rational_str).collect::<Vec<_>>(),
        "atypical": key.atypical(),
        "partial_index": key.partial_index(),
    })
}

fn trace_json(trace: &OddReflectionTrace) -> Value {
    json!({
        "start": weight_json(&trace.start),
        "end": weight_json(&trace.end),
        "steps": trace
            .steps
            .iter()
            .map(|s| {
                json!({
                    "alpha": weight_json(&s.alpha),
                    "kind": match s.kind {
                        StepKind::OddReflection => "odd_reflection",
                        StepKind::Inclusion => "inclusion",
                    },
                    "weight": weight_json(&s.weight_after),
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn certificate_json(cert: &WitnessCertificate) -> Value {
    json!({
        "lam": weight_json(&cert.lam),
        "alpha": weight_json(&cert.alpha),
        "mu": weight_json(&cert.mu),
        "s_dot_lam": weight_json(&cert.s_dot_lam),
        "socle_member": weight_json(&cert.socle_member),
        "top_excludes_mu": cert.top_excludes_mu,
        "u_character": gclass_json(&cert.u_character),
        "translation_shift": cert.translation_shift.as_ref().map(rational_str),
    })
}

fn status_str(status: JantzenStatus) -> &'static str {
    match status {
        JantzenStatus::Zero => "zero",
        JantzenStatus::Semisimple => "semisimple",
        JantzenStatus::NonSemisimple => "nonsemisimple",
        JantzenStatus::Unsupported => "unsupported",
    }
}

fn report_json(report: &JantzenReport) -> Value {
    json!({
        "status": status_str(report.status),
        "constituents": report
            .constituents
            .iter()
            .map(|c| {
                json!({
                    "weight": weight_json(&c.weight),
                    "form": match c.form {
                        ConstituentForm::SimpleSuper => "simple-super",
                        ConstituentForm::KacSimple => "kac-simple",
                    },
                    "mult": c.multiplicity,
                })
            })
            .collect::<Vec<_>>(),
        "certificate": report.certificate.as_ref().map(certificate_json),
        "character": report.character.as_ref().map(gclass_json),
        "socle": report.socle.as_ref().map(weight_json),
        "top": report.top.as_ref().map(weight_json),
        "note": report.note,
    })
}

fn block_report_json(report: &BlockReport) -> Value {
    json!({
        "key": block_key_json(&report.key),
        "atypical": report.atypical,
        "witness": report.witness.as_ref().map(certificate_json),
        "jantzen_middles": report.jantzen_middles,
        "kl_theory": report.kl_theory,
    })
}

fn parse_word(n: usize, s: &str) -> Result<WeylElem, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(WeylElem::identity(n));
    }
    let word: Result<Vec<usize>, Error> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad word letter {t:?}: {e}")))
        })
        .collect();
    weyl::from_reduced_word(n, &word?)
}

struct Session {
    cache_path: Option<PathBuf>,
}

impl Session {
    fn table(&self, n: usize) -> Result<KlTable, Error> {
        let table = KlTable::new(n)?;
        if let Some(path) = &self.cache_path {
            if path.exists() {
                table.load(path)?;
            }
        }
        Ok(table)
    }

    fn persist(&self, table: &KlTable) {
        if let Some(path) = &self.cache_path {
            // Cache write failure is not an answer failure.
            let _ = table.save(path);
        }
    }
}

/// Runs one request, returning (exit code, serialized output). Exit 0 on
/// success, 1 on input errors, 2 on mathematically valid but out-of-scope
/// queries.
pub fn run(cli: Cli) -> (i32, String) {
    let format = cli.format.unwrap_or_else(|| {
        match std::env::var("PEO_FORMAT").as_deref() {
            Ok("table") => Format::Table,
            _ => Format::Json,
        }
    });
    let cache_path = if cli.no_kl_cache {
        None
    } else {
        cli.kl_cache
            .or_else(|| std::env::var("PEO_KL_CACHE").ok().map(PathBuf::from))
    };
    let session = Session { cache_path };
    match dispatch(&session, cli.command) {
        Ok(value) => (0, render(format, &value)),
        Err(Error::Unsupported(reason)) => {
            (2, render(format, &json!({ "unsupported": reason })))
        }
        Err(err) => (1, render(format, &json!({ "error": err.to_string() }))),
    }
}

fn render(format: Format, value: &Value) -> String {
    match format {
        Format::Json => value.to_string(),
        Format::Table => render_table(value),
    }
}

// Table mode: one "key<TAB>value" line per top-level field; arrays become
// one line per entry with compact JSON payloads.
fn render_table(value: &Value) -> String {
    let mut lines = Vec::new();
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Array(items) => {
                        for item in items {
                            lines.push(format!("{k}\t{item}"));
                        }
                    }
                    other => lines.push(format!("{k}\t{other}")),
                }
            }
        }
        other => lines.push(other.to_string()),
    }
    lines.join("\n")
}

fn context_and_weight(arg: &WeightArg) -> Result<(RankContext, Weight), Error> {
    let ctx = make_context(arg.n)?;
    let lam = Weight::parse(&arg.weight, arg.n)?;
    Ok((ctx, lam))
}

fn dispatch(session: &Session, command: Command) -> Result<Value, Error> {
    match command {
        Command::Weight(cmd) => weight_cmd(cmd),
        Command::Weyl(cmd) => weyl_cmd(session, cmd),
        Command::Char(cmd) => char_cmd(session, cmd),
        Command::Block(cmd) => block_cmd(cmd),
        Command::Oddref(cmd) => oddref_cmd(cmd),
        Command::Jantzen(cmd) => jantzen_cmd(session, cmd),
    }
}

fn weight_cmd(cmd: WeightCmd) -> Result<Value, Error> {
    match cmd {
        WeightCmd::Typical(arg) => {
            let (ctx, lam) = context_and_weight(&arg)?;
            let (label, value) = weights::typicality(&ctx, &lam);
            Ok(json!({
                "typical": label == Typicality::Typical,
                "t_value": rational_str(&value),
            }))
        }
        WeightCmd::Dominance(arg) => {
            let (ctx, lam) = context_and_weight(&arg)?;
            let class = match weights::dominance_class(&ctx, &lam) {
                DominanceClass::Dominant => "dominant",
                DominanceClass::AntiDominant => "anti-dominant",
                DominanceClass::Both => "both",
                DominanceClass::Neither => "neither",
            };
            Ok(json!({ "dominance": class }))
        }
        WeightCmd::Dot { base, word } => {
            let (ctx, lam) = context_and_weight(&base)?;
            let w = parse_word(base.n, &word)?;
            let moved = weights::dot_action(&ctx, &w, &lam)?;
            Ok(json!({ "weight": weight_json(&moved) }))
        }
        WeightCmd::Hat(arg) => {
            let (ctx, lam) = context_and_weight(&arg)?;
            Ok(json!({ "weight": weight_json(&weights::hat(&ctx, &lam)) }))
        }
        WeightCmd::Leq { base, other } => {
            let (ctx, lam) = context_and_weight(&base)?;
            let upper = Weight::parse(&other, base.n)?;
            Ok(json!({ "leq": weights::order_leq(&ctx, &lam, &upper)? }))
        }
    }
}

fn weyl_cmd(session: &Session, cmd: WeylCmd) -> Result<Value, Error> {
    match cmd {
        WeylCmd::Kl { n, x, y } => {
            let xe = parse_word(n, &x)?;
            let ye = parse_word(n, &y)?;
            let table = session.table(n)?;
            let p = table.polynomial(&xe, &ye)?;
            session.persist(&table);
            Ok(json!({
                "polynomial": p.to_string(),
                "coefficients": p.coeffs(),
            }))
        }
        WeylCmd::Bruhat { n, x, y } => {
            let xe = parse_word(n, &x)?;
            let ye = parse_word(n, &y)?;
            Ok(json!({ "leq": weyl::bruhat_leq(&xe, &ye)? }))
        }
    }
}

fn char_cmd(session: &Session, cmd: CharCmd) -> Result<Value, Error> {
    match cmd {
        CharCmd::SuperExpand(arg) => {
            let (ctx, lam) = context_and_weight(&arg)?;
            let cls = characters::verma_super_expand(&ctx, &lam)?;
            Ok(json!({ "class": gclass_json(&cls) }))
        }
        CharCmd::SimpleExpand(arg) => {
            let (ctx, lam) = context_and_weight(&arg)?;
            let table = session.table(arg.n)?;
            let cls = characters::kac_simple_expand(&table, &ctx, &lam)?;
            session.persist(&table);
            Ok(json!({ "class": gclass_json(&cls) }))
        }
        CharCmd::Mult { base, nu } => {
            let (ctx, lam) = context_and_weight(&base)?;
            let target = Weight::parse(&nu, base.n)?;
            let cls = characters::verma_super_expand(&ctx, &lam)?;
            let counter = KostantCounter::new(base.n);
            let mult = characters::weight_multiplicity(&counter, &cls, &target)?;
            Ok(json!({ "multiplicity": mult }))
        }
    }
}

fn block_cmd(cmd: BlockCmd) -> Result<Value, Error> {
    match cmd {
        BlockCmd::Classify(arg) => {
            let (ctx, lam) = context_and_weight(&arg)?;
            Ok(block_key_json(&blocks::block_key(&ctx, &lam)?))
        }
        BlockCmd::Same { base, other } => {
            let (ctx, lam) = context_and_weight(&base)?;
            let mu = Weight::parse(&other, base.n)?;
            Ok(json!({ "same": blocks::same_block(&ctx, &lam, &mu)? }))
        }
        BlockCmd::Census { n, radius } => {
            let ctx = make_context(n)?;
            let keys = blocks::census(&ctx, radius)?;
            Ok(json!({
                "keys": keys.iter().map(block_key_json).collect::<Vec<_>>(),
            }))
        }
    }
}

fn oddref_cmd(cmd: OddrefCmd) -> Result<Value, Error> {
    match cmd {
        OddrefCmd::Trace { base, shift_kac } => {
            let (ctx, lam) = context_and_weight(&base)?;
            let start = if shift_kac {
                let shift = ctx
                    .omega()
                    .scale(crate::Rat::from_integer(base.n as i64 - 1));
                lam.sub(&shift)
            } else {
                lam
            };
            let (_, trace) = odd_reflections::br_to_b(&ctx, &start)?;
            Ok(trace_json(&trace))
        }
        OddrefCmd::SocleKac(arg) => {
            let (ctx, mu) = context_and_weight(&arg)?;
            let socle = odd_reflections::socle_of_kac(&ctx, &mu)?;
            Ok(json!({ "socle": weight_json(&socle) }))
        }
    }
}

fn jantzen_cmd(session: &Session, cmd: JantzenCmd) -> Result<Value, Error> {
    match cmd {
        JantzenCmd::Middle { base, alpha } => {
            let (ctx, lam) = context_and_weight(&base)?;
            let table = session.table(base.n)?;
            let report = jantzen::jantzen_middle(&table, &ctx, &lam, alpha)?;
            session.persist(&table);
            if report.status == JantzenStatus::Unsupported {
                return Err(Error::Unsupported(
                    report.note.unwrap_or_else(|| "out of certified scope".into()),
                ));
            }
            let finiteness = jantzen::alpha_finiteness(&ctx, &lam, alpha)?;
            let mut value = report_json(&report);
            value["alpha_finite"] = json!(finiteness == AlphaFiniteness::Finite);
            Ok(value)
        }
        JantzenCmd::Witness(arg) => {
            let (ctx, lam) = context_and_weight(&arg)?;
            let key = blocks::block_key(&ctx, &lam)?;
            let cert = jantzen::atypical_witness(&ctx, &key)?;
            Ok(certificate_json(&cert))
        }
        JantzenCmd::Report { n, weight } => {
            let ctx = make_context(n)?;
            match weight {
                Some(s) => {
                    let lam = Weight::parse(&s, n)?;
                    let key = blocks::block_key(&ctx, &lam)?;
                    Ok(block_report_json(&jantzen::block_report(&ctx, &key)?))
                }
                None => {
                    let mut reports = Vec::new();
                    for i in 0..=n {
                        let d = ctx.distinguished_weight(i)?;
                        let key = blocks::block_key(&ctx, &d)?;
                        reports.push(block_report_json(&jantzen::block_report(&ctx, &key)?));
                    }
                    Ok(json!({ "reports": reports }))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::parse_from(std::iter::once("peo").chain(args.iter().copied()));
        run(cli)
    }

    #[test]
    fn example_middle_report() {
        let (code, out) = run_args(&[
            "jantzen", "middle", "--n", "2", "--weight", "0,2", "--alpha", "1", "--format",
            "json", "--no-kl-cache",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "nonsemisimple");
        assert_eq!(v["constituents"][0]["weight"], json!(["1", "1"]));
        assert_eq!(v["socle"], json!(["0", "0"]));
        assert_eq!(v["top"], json!(["1", "1"]));
    }

    #[test]
    fn classify_and_census() {
        let (code, out) = run_args(&["block", "classify", "--n", "3", "--weight", "-2,0,2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["atypical"], json!(true));
        assert_eq!(v["partial_index"], json!(0));

        let (code, out) = run_args(&["block", "census", "--n", "2", "--box", "3"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["keys"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn shift_kac_trace_ends_at_socle() {
        let (code, out) = run_args(&[
            "oddref", "trace", "--n", "2", "--weight", "1,1", "--shift-kac",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["end"], json!(["0", "0"]));
    }

    #[test]
    fn exit_codes() {
        let (code, out) = run_args(&["weight", "typical", "--n", "2", "--weight", "0,zzz"]);
        assert_eq!(code, 1);
        assert!(out.contains("error"));

        // Atypical weight outside the witness shape: valid input, out of
        // certified scope.
        let (code, out) = run_args(&[
            "jantzen", "middle", "--n", "3", "--weight", "-2,0,1", "--alpha", "1",
        ]);
        assert_eq!(code, 2);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v.get("unsupported").is_some());
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        for args in [
            vec!["block", "classify", "--n", "3", "--weight", "-2,0,2"],
            vec!["char", "super-expand", "--n", "2", "--weight", "0,2"],
            vec![
                "jantzen", "middle", "--n", "2", "--weight", "0,2", "--alpha", "1",
            ],
            vec!["oddref", "trace", "--n", "3", "--weight", "0,0,1"],
        ] {
            let (code, out) = run_args(&args);
            assert_eq!(code, 0);
            let v: Value = serde_json::from_str(&out).unwrap();
            assert_eq!(v.to_string(), out);
        }
    }

    #[test]
    fn table_mode() {
        let (code, out) = run_args(&[
            "weight", "typical", "--n", "2", "--weight", "0,2", "--format", "table",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("typical\t"));
    }

    #[test]
    fn kl_cache_flag() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("kl.cache");
        let (code, _) = run_args(&[
            "weyl",
            "kl",
            "--n",
            "4",
            "--x",
            "2",
            "--y",
            "2,1,3,2",
            "--kl-cache",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        assert!(path.exists());

        let (code, out) = run_args(&[
            "weyl",
            "kl",
            "--n",
            "4",
            "--x",
            "2",
            "--y",
            "2,1,3,2",
            "--kl-cache",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["coefficients"], json!([1, 1]));
    }
}
