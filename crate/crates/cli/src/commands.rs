//! Command definitions and their execution.

use std::path::PathBuf;

use abcolim_core::abdiag::{ab4_check, ab5_check, ab_colimit, ab_limit, coinvariants, induced_map_on_colimits, invariants};
use abcolim_core::abgrp::{smith_normal_form, AbHom, FGAbGroup, IntMatrix};
use abcolim_core::fincat::{
    is_connected, is_filtered, is_sifted, Category, FilterFailure, FinCategory, FinGroup,
};
use abcolim_core::harting::{bounded_filtered_check, bounded_sifted_check, cap_stability, harting_compare, harting_induced, hx_category};
use abcolim_core::random::{
    random_chain_diagram, random_family, random_mono, random_scaled_chain_pair, random_z2_chain, rng,
};
use abcolim_core::setdiag::{commute_check, fixpoint_commute, set_colimit, set_limit, FinSet, SetFunctor};
use abcolim_core::{AbDiagram, Family, GModule};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;

use crate::build::*;
use crate::document::{parse_document, Document};
use crate::error::CliError;
use crate::report::{element, Format, Report};

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "abcolim", version, about = "Finite colimits, abelian-group diagrams and the Harting expansion")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide a shape property of a category (or, for `final`, a functor).
    Check { property: Property, file: PathBuf },
    /// Limit of a set diagram.
    Limit { file: PathBuf },
    /// Colimit of a set diagram.
    Colimit { file: PathBuf },
    /// Summarize the truncated multiset category on a set of letters.
    Hx {
        /// Comma-separated letters.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<String>,
        #[arg(long)]
        cap: usize,
    },
    /// Abelian-group computations.
    Ab { op: AbOp, file: PathBuf },
    /// Verify a theorem instance from a file, or on seeded random instances.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Property {
    Connected,
    Final,
    Filtered,
    Sifted,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AbOp {
    Colimit,
    Limit,
    Coinvariants,
    Invariants,
    Sum,
    Snf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub claim: Claim,
    /// Instance to check; seeded random instances when omitted.
    pub file: Option<PathBuf>,
    /// Truncation cap for the multiset category.
    #[arg(long, default_value_t = 2)]
    pub cap: usize,
    /// Number of random instances when no file is given.
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Claim {
    Ab4,
    Ab5,
    Harting,
    Commute,
    Fixpoints,
    Notlex,
}

pub fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Check { property, file } => check(*property, &load(file)?),
        Command::Limit { file } => set_limit_report(&load(file)?),
        Command::Colimit { file } => set_colimit_report(&load(file)?),
        Command::Hx { set, cap } => hx(set, *cap),
        Command::Ab { op, file } => ab(*op, &load(file)?),
        Command::Verify(args) => match &args.file {
            Some(file) => verify_file(args, &load(file)?),
            None => verify_seeded(args, cli.seed),
        },
    }
}

fn load(path: &PathBuf) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_document(&text)
}

fn wrong_kind(expected: &str, doc: &Document) -> CliError {
    CliError::Usage(format!("expected a {expected} document, found kind `{}`", doc.kind()))
}

// ---- check ----

fn check(property: Property, doc: &Document) -> Result<Report> {
    if let Property::Final = property {
        let Document::Functor(f) = doc else { return Err(wrong_kind("functor", doc)) };
        let functor = build_functor(f)?;
        let report = abcolim_core::fincat::is_final(&functor);
        let mut r = Report::new("check final");
        r.put("objects", functor.target.object_count());
        if !report.is_final {
            let names: Vec<&str> = report.failing.iter().map(|&c| functor.target.object_label(c)).collect();
            r.field("disconnected slices", names.join(", "), names.join(","));
        }
        r.verdict(report.is_final);
        return Ok(r);
    }
    let Document::Category(c) = doc else { return Err(wrong_kind("category", doc)) };
    let cat = build_category(c, "category")?;
    let label = |c: usize| cat.object_label(c).to_string();
    let mut r;
    match property {
        Property::Connected => {
            let report = is_connected(&cat);
            r = Report::new("check connected");
            r.put("objects", cat.object_count()).put("components", report.component_count);
            if !report.connected && report.component_count > 1 {
                let groups: Vec<String> = (0..report.component_count)
                    .map(|k| {
                        let members: Vec<String> = (0..cat.object_count()).filter(|&c| report.component_of[c] == k).map(label).collect();
                        format!("{{{}}}", members.join(","))
                    })
                    .collect();
                r.field("partition", groups.join(" "), groups.join(""));
            }
            r.verdict(report.connected);
        }
        Property::Filtered => {
            let report = is_filtered(&cat);
            r = Report::new("check filtered");
            r.put("objects", cat.object_count());
            match &report.failure {
                None => {
                    r.put("upper bounds", report.upper_bounds.len()).put("coequalized pairs", report.coequalizers.len());
                }
                Some(FilterFailure::Empty) => {
                    r.put("certificate", "empty category");
                }
                Some(FilterFailure::NoUpperBound { left, right }) => {
                    r.field(
                        "certificate",
                        format!("no upper bound for {} and {}", label(*left), label(*right)),
                        format!("no_upper_bound:{},{}", label(*left), label(*right)),
                    );
                }
                Some(FilterFailure::NotCoequalized { f, g }) => {
                    let (f, g) = (cat.morphism_label(*f), cat.morphism_label(*g));
                    r.field("certificate", format!("{f} and {g} are not coequalized"), format!("not_coequalized:{f},{g}"));
                }
            }
            r.verdict(report.filtered);
        }
        Property::Sifted => {
            let report = is_sifted(&cat);
            r = Report::new("check sifted");
            r.put("objects", cat.object_count());
            if report.empty {
                r.put("certificate", "empty category");
            } else if let Some(&(a, b)) = report.failing.first() {
                r.put("failing pairs", report.failing.len()).field(
                    "certificate",
                    format!("slice ({}, {}) / Δ is disconnected", label(a), label(b)),
                    format!("disconnected_slice:{},{}", label(a), label(b)),
                );
            }
            r.verdict(report.sifted);
        }
        Property::Final => unreachable!("handled above"),
    }
    Ok(r)
}

// ---- set limits and colimits ----

fn set_diagram(doc: &Document) -> Result<SetFunctor> {
    let Document::Setdiagram(d) = doc else { return Err(wrong_kind("setdiagram", doc)) };
    build_set_diagram(d)
}

fn set_element(d: &SetFunctor, c: usize, x: usize) -> String {
    format!("{}:{}", d.base.object_label(c), d.sets[c].label(x))
}

fn set_colimit_report(doc: &Document) -> Result<Report> {
    let d = set_diagram(doc)?;
    let col = set_colimit(&d);
    let mut r = Report::new("colimit");
    r.put("size", col.carrier().size());
    for (k, &(c, x)) in col.representatives.iter().enumerate() {
        r.put(format!("class {k}"), set_element(&d, c, x));
    }
    Ok(r)
}

fn set_limit_report(doc: &Document) -> Result<Report> {
    let d = set_diagram(doc)?;
    let lim = set_limit(&d);
    let mut r = Report::new("limit");
    r.put("size", lim.carrier().size());
    for (k, t) in lim.tuples.iter().enumerate() {
        let parts: Vec<String> = t.iter().enumerate().map(|(c, &x)| set_element(&d, c, x)).collect();
        r.field(format!("element {k}"), format!("({})", parts.join(", ")), parts.join(","));
    }
    Ok(r)
}

// ---- hx ----

fn hx(set: &[String], cap: usize) -> Result<Report> {
    let letters = FinSet::labelled(set.to_vec())?;
    let h = hx_category(&letters, cap)?;
    let mut r = Report::new("hx");
    r.put("letters", set.join(","))
        .put("cap", cap)
        .put("objects", h.object_count())
        .put("morphisms", h.morphism_count())
        .put("generators", h.generators().map_or(0, <[usize]>::len));
    let filtered = bounded_filtered_check(&h, 2);
    r.put("upper bounds checked", filtered.upper_bounds_checked)
        .put("parallel pairs checked", filtered.parallel_pairs_checked)
        .put("bounded filtered", filtered.holds());
    let sifted = bounded_sifted_check(&h);
    r.put("sifted pairs checked", sifted.pairs_checked).put("bounded sifted", sifted.holds());
    if let Some(&(a, b)) = sifted.failing.first() {
        r.put("sifted certificate", format!("{},{}", h.object_label(a), h.object_label(b)));
    }
    r.verdict(filtered.holds() && sifted.holds());
    Ok(r)
}

// ---- ab ----

fn ab_diagram(doc: &Document) -> Result<DiagramWithMorphism> {
    let Document::Abdiagram(d) = doc else { return Err(wrong_kind("abdiagram", doc)) };
    build_ab_diagram(d)
}

fn gmodule(doc: &Document) -> Result<(GModule, Option<(GModule, AbHom)>)> {
    let Document::Gmodule(m) = doc else { return Err(wrong_kind("gmodule", doc)) };
    build_gmodule(m)
}

fn family(doc: &Document) -> Result<FamilyWithMorphism> {
    let Document::Family(f) = doc else { return Err(wrong_kind("family", doc)) };
    build_family(f)
}

fn ab(op: AbOp, doc: &Document) -> Result<Report> {
    let mut r;
    match op {
        AbOp::Colimit => {
            let (d, _) = ab_diagram(doc)?;
            let col = ab_colimit(&d);
            r = Report::new("ab colimit");
            r.group("group", &col.group);
            for (c, leg) in col.cocone.components.iter().enumerate() {
                r.map(format!("leg {}", d.base.object_label(c)), leg);
            }
        }
        AbOp::Limit => {
            let (d, _) = ab_diagram(doc)?;
            let lim = ab_limit(&d);
            r = Report::new("ab limit");
            r.group("group", &lim.group);
            for (c, leg) in lim.cone.components.iter().enumerate() {
                r.map(format!("leg {}", d.base.object_label(c)), leg);
            }
        }
        AbOp::Coinvariants => {
            let (m, _) = gmodule(doc)?;
            let c = coinvariants(&m);
            r = Report::new("ab coinvariants");
            r.group("carrier", &m.carrier).group("group", &c.group).map("projection", &c.projection);
        }
        AbOp::Invariants => {
            let (m, _) = gmodule(doc)?;
            let k = invariants(&m);
            r = Report::new("ab invariants");
            r.group("carrier", &m.carrier).group("group", &k.group).map("inclusion", &k.inclusion);
        }
        AbOp::Sum => {
            let (f, _) = family(doc)?;
            let sum = f.direct_sum();
            r = Report::new("ab sum");
            r.group("group", &sum.group);
            for (i, inj) in sum.injections.iter().enumerate() {
                r.map(format!("injection {}", f.index.label(i)), inj);
            }
        }
        AbOp::Snf => {
            let (m, group) = match doc {
                Document::Abgroup(g) => {
                    let g = build_group(g, "")?;
                    (g.relations().clone(), Some(g))
                }
                Document::Abhom(h) => (build_hom_doc(h)?.matrix().clone(), None),
                other => return Err(wrong_kind("abgroup or abhom", other)),
            };
            let snf = smith_normal_form(&m);
            r = Report::new("ab snf");
            let diag = snf.diagonal();
            r.put("shape", format!("{}x{}", m.rows(), m.cols()))
                .field("diagonal", element(&diag), element(&diag))
                .put("rank", snf.rank())
                .put("U", &snf.u)
                .put("V", &snf.v)
                .put("S", &snf.s);
            if let Some(g) = group {
                r.group("group", &g);
            }
        }
    }
    Ok(r)
}

// ---- verify ----

fn verify_file(args: &VerifyArgs, doc: &Document) -> Result<Report> {
    match args.claim {
        Claim::Ab4 => {
            let (a, m) = family(doc)?;
            let (b, eta) = m.ok_or_else(|| CliError::schema("morphism", "verify ab4 needs a morphism"))?;
            ab4_report(&a, &b, &eta, args.cap.max(2))
        }
        Claim::Ab5 => {
            let (d, m) = ab_diagram(doc)?;
            let (e, eta) = m.ok_or_else(|| CliError::schema("morphism", "verify ab5 needs a morphism"))?;
            ab5_report(&d, &e, &eta)
        }
        Claim::Harting => {
            let (f, _) = family(doc)?;
            harting_report(&f, args.cap)
        }
        Claim::Commute => {
            let Document::Setdiagram(sd) = doc else { return Err(wrong_kind("setdiagram", doc)) };
            let d = build_set_diagram(sd)?;
            let (filtered, second) = product_factors(&sd.base)?;
            let finite = build_category(second, "base.product[1]")?;
            commute_report(&d, &filtered, &finite)
        }
        Claim::Fixpoints => {
            let Document::Setdiagram(sd) = doc else { return Err(wrong_kind("setdiagram", doc)) };
            let d = build_set_diagram(sd)?;
            let (filtered, second) = product_factors(&sd.base)?;
            let table = second
                .group
                .as_ref()
                .ok_or_else(|| CliError::schema("base.product[1]", "expected a group category"))?;
            let group = build_group_table(table, "base.product[1].group")?;
            fixpoint_report(&d, &filtered, &group)
        }
        Claim::Notlex => {
            let (m, t) = gmodule(doc)?;
            let (n, eta) = t.ok_or_else(|| CliError::schema("morphism", "verify notlex needs a morphism"))?;
            notlex_report(&m, &n, &eta)
        }
    }
}

fn ab4_report(a: &Family, b: &Family, eta: &[AbHom], cap: usize) -> Result<Report> {
    let report = ab4_check(a, b, eta)?;
    let h = hx_category(&a.index, cap)?;
    let cross = harting_induced(a, b, eta, &h)?;
    let mut r = Report::new("verify ab4");
    r.group("source sum", report.induced.source())
        .group("target sum", report.induced.target())
        .group("kernel", &report.kernel)
        .put("harting route agrees", cross.agree)
        .put("harting route mono", cross.mono)
        .verdict(report.holds && cross.agree && cross.mono);
    Ok(r)
}

fn ab5_report(d: &AbDiagram, e: &AbDiagram, eta: &[AbHom]) -> Result<Report> {
    let report = ab5_check(d, e, eta)?;
    let mut r = Report::new("verify ab5");
    r.group("colimit of kernels", &report.colimit_of_kernels)
        .group("kernel of colimit", &report.kernel_of_colimit)
        .map("comparison", &report.comparison)
        .verdict(report.holds);
    Ok(r)
}

fn harting_report(f: &Family, cap: usize) -> Result<Report> {
    let h = hx_category(&f.index, cap)?;
    let report = harting_compare(f, &h)?;
    let stability = cap_stability(f, cap)?;
    let mut r = Report::new("verify harting");
    r.put("cap", cap)
        .group("direct sum", &report.direct_sum.group)
        .group("colimit", &report.colimit.group)
        .put("inverse pair", report.inverse_pair)
        .put("cocones commute", report.cocones_commute)
        .field("next cap", stability.at_next.to_string(), stability.at_next.machine())
        .put("cap stable", stability.stable());
    if let Some(why) = &report.failure {
        r.put("certificate", why);
    }
    r.verdict(report.is_iso() && stability.stable());
    Ok(r)
}

fn commute_report(d: &SetFunctor, filtered: &FinCategory, finite: &FinCategory) -> Result<Report> {
    let report = commute_check(d, filtered, finite)?;
    let mut r = Report::new("verify commute");
    r.put("colim lim size", report.colim_of_lim.size())
        .put("lim colim size", report.lim_of_colim.size())
        .put("comparison", format!("{:?}", report.comparison.map).replace(' ', ""))
        .verdict(report.bijective);
    Ok(r)
}

fn fixpoint_report(d: &SetFunctor, filtered: &FinCategory, group: &FinGroup) -> Result<Report> {
    let report = fixpoint_commute(filtered, group, d)?;
    let mut r = Report::new("verify fixpoints");
    r.put("colim of fixed points", report.colim_of_fixed.size())
        .put("fixed points of colim", report.fixed_of_colim.len())
        .put("comparison", format!("{:?}", report.comparison.map).replace(' ', ""))
        .verdict(report.bijective);
    Ok(r)
}

fn notlex_report(m: &GModule, n: &GModule, eta: &AbHom) -> Result<Report> {
    let induced = induced_map_on_colimits(&m.to_diagram(), &n.to_diagram(), std::slice::from_ref(eta))?;
    let mono = eta.is_mono();
    let induced_mono = induced.map.is_mono();
    let mut r = Report::new("verify notlex");
    r.put("component mono", mono)
        .group("source coinvariants", &induced.source.group)
        .group("target coinvariants", &induced.target.group)
        .map("induced", &induced.map)
        .put("induced zero", induced.map.is_zero())
        .put("induced mono", induced_mono);
    if !induced_mono {
        let k = induced.map.kernel();
        let from = k.group.from_canonical();
        let width = from.source().generators();
        if width > 0 {
            let mut e = vec![num_bigint::BigInt::from(0); width];
            e[0] = 1.into();
            let witness = k.inclusion.apply(&from.apply(&e));
            let shown = element(&induced.source.group.normal_form(&witness));
            r.field("certificate", format!("{shown} ≠ 0 is sent to 0"), shown);
        }
    }
    r.verdict(mono && !induced_mono);
    Ok(r)
}

/// The sign-changing module, the swap module and `1 ↦ (−1, 1)`.
pub fn sign_and_swap() -> (GModule, GModule, AbHom) {
    let z2 = FinGroup::cyclic(2);
    let z = FGAbGroup::free(1);
    let z_2 = FGAbGroup::free(2);
    let neg = AbHom::scalar(&z, -1);
    let swap = AbHom::new(z_2.clone(), z_2.clone(), IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]])).expect("2×2");
    let m = GModule::from_generators(z2.clone(), z, &[(1, neg)]).expect("involution");
    let n = GModule::from_generators(z2, z_2.clone(), &[(1, swap)]).expect("involution");
    let eta = AbHom::new(m.carrier.clone(), z_2, IntMatrix::from_rows(&[vec![-1], vec![1]])).expect("2×1");
    (m, n, eta)
}

fn verify_seeded(args: &VerifyArgs, seed: u64) -> Result<Report> {
    if let Claim::Notlex = args.claim {
        let (m, n, eta) = sign_and_swap();
        return notlex_report(&m, &n, &eta);
    }
    let mut r = rng(seed);
    let mut out = Report::new(format!("verify {} --seed {seed}", claim_name(args.claim)));
    let mut all = true;
    for t in 0..args.trials {
        let trial = match args.claim {
            Claim::Ab4 => {
                let letters = r.gen_range(1..=3);
                let a = random_family(&mut r, letters, 2, 6);
                let eta: Vec<AbHom> = a.groups.iter().map(|g| random_mono(&mut r, g, 1, 4)).collect();
                let b = Family::new(a.index.clone(), eta.iter().map(|h| h.target().clone()).collect())?;
                ab4_report(&a, &b, &eta, args.cap.max(2))?
            }
            Claim::Ab5 => {
                let levels = r.gen_range(2..=4);
                let (d, e, eta) = random_scaled_chain_pair(&mut r, levels, 2, 6);
                ab5_report(&d, &e, &eta)?
            }
            Claim::Harting => {
                let letters = r.gen_range(1..=3);
                harting_report(&random_family(&mut r, letters, 2, 6), args.cap)?
            }
            Claim::Commute => {
                let shapes = [FinCategory::discrete(2), FinCategory::parallel_pair(), FinCategory::span()];
                let shape = shapes[r.gen_range(0..shapes.len())].clone();
                let levels = r.gen_range(1..=4);
                let d = random_chain_diagram(&mut r, levels, &shape, 4)?;
                commute_report(&d, &FinCategory::chain(levels), &shape)?
            }
            Claim::Fixpoints => {
                let levels = r.gen_range(1..=4);
                let d = random_z2_chain(&mut r, levels, 5)?;
                fixpoint_report(&d, &FinCategory::chain(levels), &FinGroup::cyclic(2))?
            }
            Claim::Notlex => unreachable!("handled above"),
        };
        let holds = trial.verdict.exit_code() == 0;
        all &= holds;
        out.put(format!("trial {t}"), if holds { "holds" } else { "fails" });
    }
    out.put("trials", args.trials).verdict(all);
    Ok(out)
}

fn claim_name(c: Claim) -> &'static str {
    match c {
        Claim::Ab4 => "ab4",
        Claim::Ab5 => "ab5",
        Claim::Harting => "harting",
        Claim::Commute => "commute",
        Claim::Fixpoints => "fixpoints",
        Claim::Notlex => "notlex",
    }
}
