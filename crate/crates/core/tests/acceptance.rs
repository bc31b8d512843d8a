//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::process::ExitCode;

use cutdim::composer::{
    build_family_f, corona_uniform, rooted_product_uniform, CompositionBuilder,
};
use cutdim::metrics::domination_number;
use cutdim::resolver::{attaching_dimension, metric_dimension, upper_metric_dimension, Resolver};
use cutdim::theorems::{
    chain_report, closed_form_dim_star, corona_uniform_report, cota_bounds_report,
    dim_equals_n_report, extremal_report, family_f_report, k1_lemma_check, lower_bound_report,
    main_equality_report, rooted_uniform_report, tree_dim_report, tree_t_report, Verdict,
};
use cutdim::{Graph, Limits, StandardKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_domination, load, random_connected, random_tree};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&mut ChaCha8Rng) -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: cutdim::Error) -> String {
    err.to_string()
}

fn lim() -> Limits {
    Limits::default()
}

fn named_families() -> Outcome {
    for n in 2..=8 {
        let k = Graph::complete(n).unwrap();
        check(metric_dimension(&k).map_err(e)?.size == n - 1, || {
            format!("dim(K_{n})")
        })?;
        check(upper_metric_dimension(&k).map_err(e)? == n - 1, || {
            format!("dim+(K_{n})")
        })?;
    }
    for r in 2..=7 {
        let s = Graph::star(r).unwrap();
        check(metric_dimension(&s).map_err(e)?.size == r - 1, || {
            format!("dim(K_1,{r})")
        })?;
    }
    for n in 3..=10 {
        let c = Graph::cycle(n).unwrap();
        check(metric_dimension(&c).map_err(e)?.size == 2, || {
            format!("dim(C_{n})")
        })?;
        check(upper_metric_dimension(&c).map_err(e)? == 2, || {
            format!("dim+(C_{n})")
        })?;
        let p = Graph::path(n).unwrap();
        check(metric_dimension(&p).map_err(e)?.size == 1, || {
            format!("dim(P_{n})")
        })?;
        // {0} and {2} are the only minimal resolving sets of P_3
        let upper = if n == 3 { 1 } else { 2 };
        check(upper_metric_dimension(&p).map_err(e)? == upper, || {
            format!("dim+(P_{n})")
        })?;
    }
    Ok("K_2..K_8, K_1,2..K_1,7, C_3..C_10, P_3..P_10".into())
}

fn dim_star_closed_forms() -> Outcome {
    let mut checked = 0;
    let families = [
        (StandardKind::Path, 2..=8),
        (StandardKind::Cycle, 3..=8),
        (StandardKind::Complete, 2..=7),
    ];
    for (kind, sizes) in families {
        for n in sizes {
            let g = Graph::standard(kind, n).unwrap();
            for mask in 1u32..1 << n {
                let a = common::bits(mask);
                let exact = attaching_dimension(&g, &a).map_err(e)?.size;
                let formula = closed_form_dim_star(kind, n, &a).map_err(e)?;
                check(exact == formula, || {
                    format!("{kind:?} {n} A={a:?}: exact {exact}, formula {formula}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} attachment sets"))
}

fn extremal_fixture() -> Outcome {
    let built = load("star_c4_cliques.json");
    let c = built.composition().unwrap();
    check(c.len() == 6 && c.graph().order() == 17, || {
        "fixture shape".into()
    })?;
    let dim = metric_dimension(c.graph()).map_err(e)?.size;
    check(dim == 6, || format!("dim = {dim}"))?;
    let taus: Vec<usize> = (0..6)
        .map(|i| c.tau(i, lim()))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    check(taus == [1, 2, 1, 2, 1, 1], || format!("tau = {taus:?}"))?;
    let r = extremal_report(c, lim()).map_err(e)?;
    check(r.verdict == Verdict::FormulaMatches, || format!("{r:?}"))?;
    Ok("dim 6, tau (1,2,1,2,1,1)".into())
}

fn chain_fixture() -> Outcome {
    let built = load("chain_star_c4_k3_k3.json");
    let c = built.composition().unwrap();
    let dim = metric_dimension(c.graph()).map_err(e)?.size;
    check(dim == 4, || format!("dim = {dim}"))?;
    let stars: Vec<usize> = (0..c.len())
        .map(|i| c.dim_star(i, lim()))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    check(stars == [2, 1, 0, 1], || format!("dim* = {stars:?}"))?;
    for r in [
        chain_report(c, lim()).map_err(e)?,
        main_equality_report(c, lim()).map_err(e)?,
    ] {
        check(
            r.verdict == Verdict::FormulaMatches && r.formula == Some(4),
            || format!("{r:?}"),
        )?;
    }
    Ok("dim 4, dim* (2,1,0,1)".into())
}

fn family_f() -> Outcome {
    for t in 3..=5 {
        let r = family_f_report(t, lim()).map_err(e)?;
        check(r.verdict == Verdict::FormulaMatches, || {
            format!("G_{t}: {r:?}")
        })?;
        let g = build_family_f(t).unwrap();
        let x: Vec<usize> = (1..=t).collect();
        let res = Resolver::new(&g).map_err(e)?;
        check(res.dim().map_err(e)? == t, || format!("dim(G_{t})"))?;
        check(res.isolation_index().map_err(e)? == t + 1, || {
            format!("I(G_{t})")
        })?;
        check(res.is_resolving(&x).map_err(e)?, || {
            format!("X resolves G_{t}")
        })?;
        let cota = cota_bounds_report(&g, 3, lim()).map_err(e)?;
        check(cota.oracle == Some(t), || {
            format!("dim(G_{t} o P_3) = {:?}", cota.oracle)
        })?;
    }
    Ok("t = 3, 4, 5".into())
}

fn corona_fixtures() -> Outcome {
    let h = load("counterexample_h.json").graph().clone();
    for g in [
        Graph::path(2).unwrap(),
        Graph::path(3).unwrap(),
        Graph::cycle(3).unwrap(),
    ] {
        let n = g.order();
        let product = corona_uniform(&g, &h).unwrap();
        let dim = metric_dimension(product.graph()).map_err(e)?.size;
        check(dim == 2 * n, || format!("dim(g o H) = {dim}, n = {n}"))?;
        let r = corona_uniform_report(&g, &h, lim()).map_err(e)?;
        check(r.verdict == Verdict::FormulaMatches, || format!("{r:?}"))?;
    }
    // Exhaustive search gives 3 for this join (4 is sometimes quoted):
    // {1,5,6} already resolves it.
    let h = load("k1h_h.json").graph().clone();
    let join = Graph::join_with_k1(&h);
    let res = Resolver::new(&join).map_err(e)?;
    let dim = res.dim().map_err(e)?;
    check(dim == 3, || format!("dim(K1+H) = {dim}"))?;
    check(res.is_resolving(&[1, 5, 6]).map_err(e)?, || {
        "{1,5,6}".into()
    })?;
    check(!res.basis_membership(h.order()).map_err(e)?, || {
        "K1 vertex in a basis".into()
    })?;
    let k1 = k1_lemma_check(&h, lim()).map_err(e)?;
    check(k1.verdict == Verdict::HypothesesUnmet, || format!("{k1:?}"))?;
    Ok("dim(g o H) = 2n for P_2, P_3, C_3; K1 vertex in no basis of K1+H (dim 3)".into())
}

fn tree_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    while count < 200 {
        let n = rng.gen_range(4..=16);
        let t = random_tree(rng, n);
        if t.is_path() {
            continue;
        }
        let r = tree_dim_report(&t, lim()).map_err(e)?;
        check(r.verdict == Verdict::FormulaMatches, || {
            format!("{:?}: {r:?}", t.edges())
        })?;
        count += 1;
    }
    let mut triples = 0;
    for n in 1..=12 {
        for a in 2..n {
            for b in a + 1..n {
                if 2 * b > a + n {
                    continue;
                }
                let r = tree_t_report(a, b, n, lim()).map_err(e)?;
                check(r.verdict == Verdict::FormulaMatches, || {
                    format!("T({a},{b},{n}): {r:?}")
                })?;
                triples += 1;
            }
        }
    }
    Ok(format!("{count} random trees, {triples} T(a,b,n)"))
}

fn parts() -> Vec<Graph> {
    vec![
        Graph::complete(3).unwrap(),
        Graph::complete(4).unwrap(),
        Graph::cycle(4).unwrap(),
        Graph::cycle(6).unwrap(),
        Graph::star(3).unwrap(),
        Graph::path(4).unwrap(),
    ]
}

fn random_composition(
    rng: &mut ChaCha8Rng,
    pool: &[Graph],
    max_order: usize,
) -> cutdim::composer::Composition {
    let mut b = CompositionBuilder::new(pool[rng.gen_range(0..pool.len())].clone()).unwrap();
    let target = rng.gen_range(2..=6);
    for k in 1.. {
        let part = pool[rng.gen_range(0..pool.len())].clone();
        if b.order() + part.order() - 1 > max_order {
            if k >= 2 {
                break;
            }
            continue;
        }
        let host = rng.gen_range(0..b.order());
        let vertex = rng.gen_range(0..part.order());
        b.attach(host, part, vertex).unwrap();
        if k + 1 >= target {
            break;
        }
    }
    b.finalize().unwrap()
}

fn composition_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let pool = parts();
    let mut equalities = 0;
    for _ in 0..100 {
        let c = random_composition(rng, &pool, 20);
        let lb = lower_bound_report(&c, lim()).map_err(e)?;
        check(lb.verdict == Verdict::BoundHolds, || format!("{lb:?}"))?;
        let eq = main_equality_report(&c, lim()).map_err(e)?;
        check(
            eq.verdict != Verdict::Refuted && eq.verdict != Verdict::Unverified,
            || format!("{eq:?}"),
        )?;
        if eq.verdict == Verdict::FormulaMatches {
            equalities += 1;
        }
    }
    Ok(format!(
        "100 compositions, {equalities} with equality hypotheses met"
    ))
}

fn rooted_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let p4 = Graph::path(4).unwrap();
    let c3 = Graph::cycle(3).unwrap();
    let left = rooted_product_uniform(&p4, &c3, 0).unwrap();
    check(left.graph().order() == 12, || "P_4 o C_3 order".into())?;
    let r = rooted_uniform_report(&p4, &c3, 0, lim()).map_err(e)?;
    check(
        r.verdict == Verdict::FormulaMatches && r.oracle == Some(4),
        || format!("{r:?}"),
    )?;
    let r = rooted_uniform_report(&c3, &p4, 1, lim()).map_err(e)?;
    check(
        r.verdict == Verdict::FormulaMatches && r.oracle == Some(3),
        || format!("{r:?}"),
    )?;

    let hs = [
        Graph::path(3).unwrap(),
        Graph::path(4).unwrap(),
        Graph::path(5).unwrap(),
        Graph::cycle(4).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::complete(3).unwrap(),
        Graph::complete(4).unwrap(),
        Graph::star(3).unwrap(),
        load("counterexample_h.json").graph().clone(),
    ];
    let mut met = 0;
    for _ in 0..50 {
        let h = &hs[rng.gen_range(0..hs.len())];
        let max_n = (24 / h.order()).max(2);
        let n = rng.gen_range(2..=max_n);
        let g = random_connected(rng, n, 0.4);
        let root = rng.gen_range(0..h.order());
        let r = rooted_uniform_report(&g, h, root, lim()).map_err(e)?;
        check(
            r.verdict != Verdict::Refuted && r.verdict != Verdict::Unverified,
            || format!("{r:?}"),
        )?;
        met += usize::from(r.verdict == Verdict::FormulaMatches);
    }

    let small = [
        Graph::path(2).unwrap(),
        Graph::path(3).unwrap(),
        Graph::cycle(4).unwrap(),
    ];
    let mut equal_n = 0;
    for h in [
        Graph::path(3).unwrap(),
        Graph::path(4).unwrap(),
        Graph::path(5).unwrap(),
        Graph::cycle(4).unwrap(),
        Graph::complete(3).unwrap(),
    ] {
        for root in h.vertices() {
            for g in &small {
                let r = dim_equals_n_report(g, &h, root, lim()).map_err(e)?;
                match r.verdict {
                    Verdict::FormulaMatches => equal_n += 1,
                    Verdict::HypothesesUnmet => {
                        // root lies in a basis, so dim = n (dim(H) - 1)
                        let dh = metric_dimension(&h).map_err(e)?.size;
                        let product = rooted_product_uniform(g, &h, root).unwrap();
                        let dim = metric_dimension(product.graph()).map_err(e)?.size;
                        let expected = if h.is_path() {
                            None
                        } else {
                            Some(g.order() * (dh - 1))
                        };
                        check(expected.is_none() || expected == Some(dim), || {
                            format!("root {root} of {:?}: dim {dim}", h.edges())
                        })?;
                    }
                    _ => return Err(format!("{r:?}")),
                }
            }
        }
    }
    Ok(format!(
        "fixtures, 50 random ({met} with hypotheses met), {equal_n} dim = n checks"
    ))
}

fn cota_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let mut runs = 0;
    for _ in 0..50 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.1..0.7);
        let g = random_connected(rng, n, p);
        for p_len in [2, 3] {
            let r = cota_bounds_report(&g, p_len, lim()).map_err(e)?;
            check(r.verdict == Verdict::BoundHolds, || {
                format!("{:?}: {r:?}", g.edges())
            })?;
            runs += 1;
        }
    }
    Ok(format!("{runs} products"))
}

fn ore_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let mut graphs = 0;
    for _ in 0..300 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.05..0.8);
        let g = random_connected(rng, n, p);
        let (gamma, witness) = domination_number(&g).map_err(e)?;
        check(2 * gamma <= n, || {
            format!("gamma {gamma} > n/2 on {:?}", g.edges())
        })?;
        check(
            gamma == brute_domination(&g) && witness.len() == gamma,
            || format!("{:?}", g.edges()),
        )?;
        graphs += 1;
    }
    Ok(format!("{graphs} graphs"))
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let criteria: [Criterion; 11] = [
        ("named-family dimensions", |_| named_families()),
        ("dim* closed forms", |_| dim_star_closed_forms()),
        ("extremal fixture", |_| extremal_fixture()),
        ("chain fixture", |_| chain_fixture()),
        ("family F", |_| family_f()),
        ("corona fixtures", |_| corona_fixtures()),
        ("tree suite", tree_suite),
        ("random compositions", composition_suite),
        ("rooted products", rooted_suite),
        ("cota bounds", cota_suite),
        ("domination bound", ore_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = run(&mut rng);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
