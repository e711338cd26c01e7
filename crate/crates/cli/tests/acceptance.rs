//! Acceptance suite: one PASS/FAIL line per criterion, with its time limit.
//!
//! All comparisons are exact. Random instances come from fixed seeds.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use abcolim_cli::build::build_category;
use abcolim_cli::{parse_document, Document};
use abcolim_core::abdiag::{
    ab4_check, ab5_check, coinvariants, generator_check, induced_map_on_colimits, invariants,
};
use abcolim_core::abgrp::{biproduct, smith_normal_form, AbHom, CanonicalForm, FGAbGroup, IntMatrix};
use abcolim_core::fincat::{
    group_as_category, is_filtered, is_final, is_sifted, FinCategory, FinFunctor, FinGroup,
};
use abcolim_core::harting::{
    bounded_filtered_check, bounded_sifted_check, cap_stability, harting_compare, harting_induced, hx_category,
};
use abcolim_core::random::{
    letter_set, random_chain_diagram, random_endomorphism_chain, random_family, random_group, random_hom,
    random_join_semilattice, random_matrix, random_mono, random_poset_functor, random_scaled_chain_pair,
    random_z2_chain, rng,
};
use abcolim_core::setdiag::{
    colimit_of_product_comparison, commute_check, fixpoint_commute, restricted_colimit_comparison,
};
use abcolim_core::{Family, GModule};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn form(rank: usize, factors: &[u32]) -> CanonicalForm {
    CanonicalForm { free_rank: rank, factors: factors.iter().map(|&d| BigInt::from(d)).collect() }
}

fn sign_module() -> GModule {
    let z = FGAbGroup::free(1);
    GModule::from_generators(FinGroup::cyclic(2), z.clone(), &[(1, AbHom::scalar(&z, -1))]).unwrap()
}

fn swap_module() -> GModule {
    let z2 = FGAbGroup::free(2);
    let swap = AbHom::new(z2.clone(), z2.clone(), IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]])).unwrap();
    GModule::from_generators(FinGroup::cyclic(2), z2, &[(1, swap)]).unwrap()
}

fn ac1() -> Check {
    let m = sign_module();
    let co = coinvariants(&m);
    let inv = invariants(&m);
    ensure!(co.group.canonical_form() == &form(0, &[2]), "coinvariants = {}", co.group);
    ensure!(inv.group.is_trivial(), "invariants = {}", inv.group);
    Ok(())
}

fn ac2() -> Check {
    let (m, n) = (sign_module(), swap_module());
    let eta = AbHom::new(m.carrier.clone(), n.carrier.clone(), IntMatrix::from_rows(&[vec![-1], vec![1]])).unwrap();
    ensure!(eta.is_mono(), "η is not mono");
    let induced = induced_map_on_colimits(&m.to_diagram(), &n.to_diagram(), &[eta]).map_err(|e| e.to_string())?;
    ensure!(induced.source.group.canonical_form() == &form(0, &[2]), "source = {}", induced.source.group);
    ensure!(induced.target.group.canonical_form() == &form(1, &[]), "target = {}", induced.target.group);
    ensure!(induced.map.is_zero(), "induced map is not zero");
    ensure!(!induced.map.is_mono(), "induced map is mono");
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/notlex.json");
    let out = abcolim_cli::run(["abcolim", "verify", "notlex", fixture.to_str().unwrap()]);
    ensure!(out.code == 0, "verify notlex exited {}", out.code);
    ensure!(out.stdout.contains("certificate:"), "no certificate printed");
    Ok(())
}

fn ac3() -> Check {
    for seed in 0..20u64 {
        let letters = 1 + (seed % 3) as usize;
        let family = random_family(&mut rng(seed), letters, 2, 6);
        let h = hx_category(&family.index, 2).map_err(|e| e.to_string())?;
        let report = harting_compare(&family, &h).map_err(|e| e.to_string())?;
        ensure!(report.is_iso(), "seed {seed}: {:?}", report.failure);
        ensure!(report.cocones_commute, "seed {seed}: cocones do not commute");
        let stability = cap_stability(&family, 2).map_err(|e| e.to_string())?;
        ensure!(stability.stable(), "seed {seed}: {} at cap 2, {} at cap 3", stability.at_cap, stability.at_next);
    }
    Ok(())
}

fn ac4() -> Check {
    for letters in 1..=3 {
        let h = hx_category(&letter_set(letters), 4).map_err(|e| e.to_string())?;
        let filtered = bounded_filtered_check(&h, 2);
        ensure!(filtered.holds(), "|X| = {letters}: {:?}", filtered.failure);
        let sifted = bounded_sifted_check(&h);
        ensure!(sifted.holds(), "|X| = {letters}: sifted fails on {:?}", sifted.failing.first());
    }
    Ok(())
}

fn ac5() -> Check {
    let shapes = [FinCategory::discrete(2), FinCategory::parallel_pair(), FinCategory::span()];
    for seed in 0..50u64 {
        let shape = &shapes[(seed % 3) as usize];
        let levels = 1 + ((seed / 3) % 4) as usize;
        let d = random_chain_diagram(&mut rng(seed), levels, shape, 4).map_err(|e| e.to_string())?;
        ensure!(d.sets.iter().all(|s| s.size() <= 4), "seed {seed}: carrier too large");
        let report = commute_check(&d, &FinCategory::chain(levels), shape).map_err(|e| e.to_string())?;
        ensure!(report.bijective, "seed {seed}: comparison {:?}", report.comparison.map);
    }
    Ok(())
}

fn ac6() -> Check {
    for seed in 0..25u64 {
        let mut r = rng(1000 + seed);
        let letters = 1 + (seed % 3) as usize;
        let a = random_family(&mut r, letters, 2, 6);
        let eta: Vec<AbHom> = a.groups.iter().map(|g| random_mono(&mut r, g, 1, 4)).collect();
        ensure!(eta.iter().all(AbHom::is_mono), "seed {seed}: generated component is not mono");
        let b = Family::new(a.index.clone(), eta.iter().map(|h| h.target().clone()).collect()).unwrap();
        let report = ab4_check(&a, &b, &eta).map_err(|e| e.to_string())?;
        ensure!(report.holds, "seed {seed}: kernel {}", report.kernel);
        let h = hx_category(&a.index, 2).map_err(|e| e.to_string())?;
        let cross = harting_induced(&a, &b, &eta, &h).map_err(|e| e.to_string())?;
        ensure!(cross.agree && cross.mono, "seed {seed}: Harting route disagrees");
    }
    for seed in 0..25u64 {
        let mut r = rng(2000 + seed);
        let levels = 2 + (seed % 3) as usize;
        let (d, e, eta) = if seed % 2 == 0 {
            random_scaled_chain_pair(&mut r, levels, 2, 6)
        } else {
            random_endomorphism_chain(&mut r, levels, 2, 6)
        };
        let report = ab5_check(&d, &e, &eta).map_err(|e| e.to_string())?;
        ensure!(
            report.holds,
            "seed {seed}: colim ker = {}, ker colim = {}",
            report.colimit_of_kernels,
            report.kernel_of_colimit
        );
    }
    Ok(())
}

fn ac7() -> Check {
    let z2 = FinGroup::cyclic(2);
    for seed in 0..10u64 {
        let levels = 1 + (seed % 4) as usize;
        let d = random_z2_chain(&mut rng(3000 + seed), levels, 5).map_err(|e| e.to_string())?;
        ensure!(d.sets.iter().all(|s| s.size() <= 5), "seed {seed}: carrier too large");
        let chain = FinCategory::chain(levels);
        let report = fixpoint_commute(&chain, &z2, &d).map_err(|e| e.to_string())?;
        ensure!(report.bijective, "seed {seed}: comparison {:?}", report.comparison.map);
        let via_limits = commute_check(&d, &chain, &group_as_category(&z2)).map_err(|e| e.to_string())?;
        ensure!(
            via_limits.lim_of_colim.size() == report.fixed_of_colim.len(),
            "seed {seed}: fixed points disagree with the limit over the group"
        );
    }
    Ok(())
}

fn ac8() -> Check {
    for n in 1..=4 {
        let chain = FinCategory::chain(n);
        let top = FinFunctor::full_inclusion(&chain, &[n - 1]);
        ensure!(is_final(&top).is_final, "top inclusion into chain({n}) is not final");
        for seed in 0..5u64 {
            let d = random_poset_functor(&mut rng(4000 + 10 * n as u64 + seed), &chain, 4).map_err(|e| e.to_string())?;
            let cmp = restricted_colimit_comparison(&top, &d).map_err(|e| e.to_string())?;
            ensure!(cmp.is_bijection(), "chain({n}), seed {seed}: {:?}", cmp.map);
        }
    }
    for seed in 0..10u64 {
        let mut r = rng(5000 + seed);
        let base = random_join_semilattice(&mut r, 3, 3);
        ensure!(is_sifted(&base).sifted, "seed {seed}: semilattice base is not sifted");
        let g = random_poset_functor(&mut r, &base, 3).map_err(|e| e.to_string())?;
        let h = random_poset_functor(&mut r, &base, 3).map_err(|e| e.to_string())?;
        let cmp = colimit_of_product_comparison(&g, &h).map_err(|e| e.to_string())?;
        ensure!(cmp.is_bijection(), "seed {seed}: {:?}", cmp.map);
    }
    Ok(())
}

/// Laplace expansion; independent of the engine's determinant.
fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i)).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn minor_gcd(m: &[Vec<BigInt>], k: usize) -> BigInt {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut g = BigInt::zero();
    for rs in subsets(r, k) {
        for cs in subsets(c, k) {
            let sub: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

fn ac9() -> Check {
    for seed in 0..100u64 {
        let (r, c) = (1 + (seed % 5) as usize, 1 + ((seed / 5) % 5) as usize);
        let m = random_matrix(&mut rng(6000 + seed), r, c, 20);
        ensure!(m.max_abs() <= BigInt::from(20), "seed {seed}: entry bound");
        let snf = smith_normal_form(&m);
        ensure!(snf.u.mul(&m).mul(&snf.v) == snf.s, "seed {seed}: U·M·V ≠ S");
        ensure!(det(&rows(&snf.u)).abs() == BigInt::from(1), "seed {seed}: U not unimodular");
        ensure!(det(&rows(&snf.v)).abs() == BigInt::from(1), "seed {seed}: V not unimodular");
        for i in 0..r {
            for j in 0..c {
                ensure!(i == j || snf.s[(i, j)].is_zero(), "seed {seed}: S is not diagonal");
            }
        }
        let d = snf.diagonal();
        for w in d.windows(2) {
            ensure!(!w[0].is_negative(), "seed {seed}: negative factor");
            let divides = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            ensure!(divides, "seed {seed}: divisibility chain broken in {d:?}");
        }
        let mrows = rows(&m);
        let mut prefix = BigInt::from(1);
        for (k, dk) in d.iter().enumerate().take(3) {
            prefix *= dk;
            ensure!(prefix == minor_gcd(&mrows, k + 1), "seed {seed}: minors oracle fails at k = {}", k + 1);
        }
    }
    Ok(())
}

fn corpus() -> Vec<(String, FinCategory)> {
    let diamond = FinCategory::poset(
        ["bot", "l", "r", "top"].iter().map(ToString::to_string).collect(),
        &[(0, 1), (0, 2), (1, 3), (2, 3)],
    )
    .unwrap();
    let mut out = vec![
        ("terminal".to_string(), FinCategory::terminal()),
        ("discrete2".into(), FinCategory::discrete(2)),
        ("discrete3".into(), FinCategory::discrete(3)),
        ("parallel".into(), FinCategory::parallel_pair()),
        ("span".into(), FinCategory::span()),
        ("cospan".into(), FinCategory::cospan()),
        ("bz2".into(), group_as_category(&FinGroup::cyclic(2))),
        ("bz3".into(), group_as_category(&FinGroup::cyclic(3))),
        ("diamond".into(), diamond),
        ("chain2xspan".into(), FinCategory::product(&FinCategory::chain(2), &FinCategory::span())),
        ("chain2xchain3".into(), FinCategory::product(&FinCategory::chain(2), &FinCategory::chain(3))),
    ];
    for n in 1..=4 {
        out.push((format!("chain{n}"), FinCategory::chain(n)));
    }
    let mut r = rng(2024);
    for i in 0..4 {
        out.push((format!("semilattice{i}"), random_join_semilattice(&mut r, 3, 3)));
    }
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut paths: Vec<_> = std::fs::read_dir(fixtures).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    for path in paths {
        let text = std::fs::read_to_string(&path).unwrap();
        // error fixtures are skipped
        if let Ok(Document::Category(doc)) = parse_document(&text) {
            if let Ok(cat) = build_category(&doc, "category") {
                out.push((path.file_stem().unwrap().to_string_lossy().into_owned(), cat));
            }
        }
    }
    out
}

/// Number of homomorphisms `a → ℤ/n`, by brute force over generator images.
fn count_homs_to_cyclic(a: &FGAbGroup, n: i64, kill: Option<&AbHom>) -> usize {
    let g = a.generators();
    let mut digits = vec![0i64; g];
    let mut count = 0;
    loop {
        let respects = |m: &IntMatrix| {
            (0..m.cols()).all(|j| {
                let s: BigInt = (0..g).map(|i| &m[(i, j)] * digits[i]).sum();
                (s % n).is_zero()
            })
        };
        // a map is well defined on relations, and (optionally) kills the image
        if respects(a.relations()) && kill.map_or(true, |h| respects(h.matrix())) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == g {
                return count;
            }
            digits[i] += 1;
            if digits[i] < n {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn ac10() -> Check {
    for (name, cat) in corpus() {
        if is_filtered(&cat).filtered {
            ensure!(is_sifted(&cat).sifted, "{name} is filtered but not sifted");
        }
    }
    for seed in 0..20u64 {
        let mut r = rng(7000 + seed);
        let groups: Vec<FGAbGroup> = (0..3).map(|_| random_group(&mut r, 2, 6)).collect();
        let bp = biproduct(&groups);
        for i in 0..3 {
            for j in 0..3 {
                let pi = bp.projections[i].compose(&bp.injections[j]).unwrap();
                let expected = if i == j { AbHom::identity(&groups[i]) } else { AbHom::zero(&groups[j], &groups[i]) };
                ensure!(pi.equals(&expected).unwrap(), "seed {seed}: π{i}∘ι{j} is wrong");
            }
        }
        let sum = (0..3)
            .map(|i| bp.injections[i].compose(&bp.projections[i]).unwrap())
            .reduce(|x, y| x.add(&y).unwrap())
            .unwrap();
        ensure!(sum.equals(&AbHom::identity(&bp.group)).unwrap(), "seed {seed}: Σ ι∘π ≠ id");
    }
    for seed in 0..20u64 {
        let mut r = rng(8000 + seed);
        let (a, b) = (random_group(&mut r, 1, 6), random_group(&mut r, 1, 6));
        let h = random_hom(&mut r, &a, &b);
        let (k, c) = (h.kernel(), h.cokernel());
        ensure!(h.compose(&k.inclusion).unwrap().is_zero(), "seed {seed}: h∘ker ≠ 0");
        ensure!(c.projection.compose(&h).unwrap().is_zero(), "seed {seed}: coker∘h ≠ 0");
        for n in [2, 4, 6] {
            let killing = count_homs_to_cyclic(&b, n, Some(&h));
            let through = count_homs_to_cyclic(&c.group, n, None);
            ensure!(killing == through, "seed {seed}: {killing} maps kill h, {through} maps leave coker into ℤ/{n}");
        }
        // a map out of ℤ lifts through the kernel exactly when h kills it
        let x = k.inclusion.apply(&vec![BigInt::from(1); k.group.generators()]);
        let phi = AbHom::new(FGAbGroup::free(1), a.clone(), IntMatrix::from_columns(a.generators(), &[x])).unwrap();
        let lifted = k.lift(&phi).map_err(|e| e.to_string())?;
        ensure!(k.inclusion.compose(&lifted).unwrap().equals(&phi).unwrap(), "seed {seed}: lift does not factor");
    }
    for seed in 0..20u64 {
        let mut r = rng(9000 + seed);
        let (a, b) = (random_group(&mut r, 2, 6), random_group(&mut r, 2, 6));
        let (f, g) = (random_hom(&mut r, &a, &b), random_hom(&mut r, &a, &b));
        let report = generator_check(&f, &g).map_err(|e| e.to_string())?;
        let differ = !f.equals(&g).unwrap();
        ensure!(report.equal != differ, "seed {seed}: equality verdict is wrong");
        if differ {
            let w = report.witness.ok_or(format!("seed {seed}: no witness"))?;
            ensure!(w.source().canonical_form() == &form(1, &[]), "seed {seed}: witness is not a ℤ-probe");
            ensure!(!f.compose(&w).unwrap().equals(&g.compose(&w).unwrap()).unwrap(), "seed {seed}: witness does not separate");
        }
        let same = generator_check(&f, &f).map_err(|e| e.to_string())?;
        ensure!(same.equal && same.witness.is_none(), "seed {seed}: f differs from itself");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, Duration, fn() -> Check); 10] = [
        ("AC1", "coinvariants and invariants of the sign action", Duration::from_secs(1), ac1),
        ("AC2", "coproduct of monos whose coinvariant map is not mono", Duration::from_secs(1), ac2),
        ("AC3", "Harting comparison iso at cap 2, stable at cap 3", Duration::from_secs(60), ac3),
        ("AC4", "bounded filtered and sifted checks on HX at cap 4", Duration::from_secs(60), ac4),
        ("AC5", "filtered colimits commute with finite limits", Duration::from_secs(30), ac5),
        ("AC6", "AB4 with Harting cross-check, and AB5 on chains", Duration::from_secs(60), ac6),
        ("AC7", "fixed points commute with chain colimits", Duration::from_secs(10), ac7),
        ("AC8", "final top inclusions and sifted products", Duration::from_secs(30), ac8),
        ("AC9", "Smith normal form properties", Duration::from_secs(30), ac9),
        ("AC10", "structural suites", Duration::from_secs(30), ac10),
    ];
    let mut failed = 0;
    for (id, what, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let verdict = match (&result, elapsed <= limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => "FAIL (time limit exceeded)".to_string(),
            (Err(why), _) => format!("FAIL ({why})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("{id} {verdict}: {what} [{:.3} s, limit {} s]", elapsed.as_secs_f64(), limit.as_secs());
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
