use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use serde_json::json;

use rootgraded::acceptance::run_all;
use rootgraded::chevalley::{ChevalleyAlgebra, Embedding, EmbeddingJson};
use rootgraded::dialg::{self, check_alternative, check_associative, is_commutative, Dialgebra};
use rootgraded::exactlin::{q, rank, Matrix, Q};
use rootgraded::leibniz::{boundary, check_leibniz, homology, universal_central_extension, LeibnizAlgebra};
use rootgraded::matrixleib::{build_gl, build_sl, build_steinberg_model, build_tensor_algebra, type_a_indices};
use rootgraded::recognition::{
    build_chart_with, build_tensor_map, check_cartan_action, check_type_a_relations, recover_products,
    verify_grading, verify_recovered_identities, ChartOptions, CoordinateChart, GradedDecomposition,
    RecoveredDialgebra,
};
use rootgraded::report::{CheckOutcome, RunReport};
use rootgraded::rootsys::{class_of, PairClass, RootKind, RootSystem};
use rootgraded::table::Table;
use rootgraded::Error;

use crate::input;
use crate::{Axioms, BuildKind, RoundtripKind};

pub struct Options {
    pub cap: usize,
    pub seed: u64,
}

fn timed(report: &mut RunReport, name: &str, f: impl FnOnce(&mut CheckOutcome)) {
    let start = Instant::now();
    let mut c = CheckOutcome::new(name);
    f(&mut c);
    report.add_check(c, Some(start.elapsed().as_millis() as u64));
}

fn finish(mut report: RunReport, start: Instant) -> RunReport {
    report.timing.total_ms = start.elapsed().as_millis() as u64;
    report
}

pub fn roots(label: &str, classes: bool) -> Result<RunReport> {
    let start = Instant::now();
    let rs = input::root_system(label)?;
    let mut report = RunReport::new(format!("roots {}", rs.label()));
    timed(&mut report, &format!("root system {}", rs.label()), |c| {
        c.fact("rank", rs.rank());
        c.fact("roots", rs.len());
        c.fact("positive roots", rs.positive_count());
        let names: Vec<String> = rs.roots().map(|r| rs.name(r)).collect();
        c.fact("root list", names.join(" "));
        let bad = rs.roots().find(|&r| rs.pairing(r, r) != 2 || rs.pairing(r, rs.negative(r)) != -2);
        c.claim("every root has norm 2 and an opposite", bad.is_none(), || {
            format!("root {}", rs.name(bad.unwrap_or_default()))
        });
        c.expect_eq("twice the positive roots", 2 * rs.positive_count(), rs.len());
    });
    if classes {
        timed(&mut report, "A2-pair classes", |c| pair_census(c, &rs));
    }
    Ok(finish(report, start))
}

fn pair_census(c: &mut CheckOutcome, rs: &RootSystem) {
    let orbits = rs.a2_orbits();
    let Some(pairs) = c.absorb("enumerate A2-pairs", rs.enumerate_a2_pairs()) else {
        return;
    };
    let positive = pairs.iter().filter(|p| p.class == PairClass::Positive).count();
    let negative = pairs.len() - positive;
    let classes = usize::from(positive > 0) + usize::from(negative > 0);
    c.fact("A2-pairs", pairs.len());
    c.fact("classes", classes);
    c.fact("positive class", positive);
    c.fact("negative class", negative);
    c.expect_eq("Weyl orbits", orbits.len(), classes);
    c.expect_eq("pairs in orbits", orbits.iter().map(Vec::len).sum::<usize>(), pairs.len());
    let opposite = pairs
        .iter()
        .all(|p| class_of(&pairs, rs.negative(p.second), rs.negative(p.first)) == Some(p.class));
    c.claim("(b,g) ~ (-g,-b)", opposite, || "a pair fails".into());
    let (a, b) = rs.seed_pair();
    c.fact("seed pair", format!("({}, {})", rs.name(a), rs.name(b)));
}

pub fn chevalley(label: &str, verify: bool) -> Result<RunReport> {
    let start = Instant::now();
    let g = input::chevalley(label)?;
    let rs = g.root_system();
    let mut report = RunReport::new(format!("chevalley {}", rs.label()));
    timed(&mut report, &format!("g({})", rs.label()), |c| {
        c.fact("dim", g.dim());
        c.fact("cartan rank", rs.rank());
        c.fact("nonzero structure constants", g.algebra().table().constants().count());
        c.fact("digest", g.digest());
    });
    if verify {
        timed(&mut report, "Jacobi identity on all basis triples", |c| {
            let n = g.dim();
            let found = rootgraded::witness::first_failing_triple(n, |x, y, z| {
                (!g.jacobi_holds(x, y, z)).then(|| rootgraded::Witness::message(format!("triple ({x}, {y}, {z})")))
            });
            c.push(rootgraded::AxiomReport::from_search("Jacobi", found));
            c.push(check_leibniz(g.algebra().table()).lie);
        });
        timed(&mut report, "Cartan relations", |c| cartan_relations(c, &g));
    }
    Ok(finish(report, start))
}

fn cartan_relations(c: &mut CheckOutcome, g: &ChevalleyAlgebra) {
    let rs = g.root_system();
    let n = g.dim();
    let dense = |v: &[(usize, Q)]| rootgraded::exactlin::dense_from_sparse(v, n);
    let mut coroot_fail = None;
    let mut weight_fail = None;
    for r in rs.roots() {
        let mut want = vec![q(0); n];
        for (i, &k) in g.coroot(r).iter().enumerate() {
            want[g.h(i)] = q(k);
        }
        if coroot_fail.is_none() && dense(g.algebra().table().get(g.e(r), g.e(rs.negative(r)))) != want {
            coroot_fail = Some(rs.name(r));
        }
        for i in 0..rs.rank() {
            let mut want = vec![q(0); n];
            want[g.e(r)] = q(rs.pairing_simple(rs.coeffs(r), i));
            if weight_fail.is_none() && dense(g.algebra().table().get(g.h(i), g.e(r))) != want {
                weight_fail = Some(format!("H{} on {}", i + 1, rs.name(r)));
            }
        }
    }
    c.claim("[e_a, e_-a] is the coroot of a", coroot_fail.is_none(), || format!("{coroot_fail:?}"));
    c.claim("[H_i, e_a] = <a, a_i> e_a", weight_fail.is_none(), || format!("{weight_fail:?}"));
}

pub fn dialg_check(path: &Path, axioms: Axioms) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::new("dialg check");
    let d = input::dialgebra(path, &mut report)?;
    if matches!(axioms, Axioms::Ass | Axioms::All) {
        timed(&mut report, "associative dialgebra axioms", |c| c.extend(check_associative(&d)));
    }
    if matches!(axioms, Axioms::Alt | Axioms::All) {
        timed(&mut report, "alternative dialgebra identities", |c| c.extend(check_alternative(&d)));
    }
    if matches!(axioms, Axioms::All) {
        timed(&mut report, "structure", |c| {
            c.fact("dim", d.dim());
            c.fact("bar-unit", d.bar_unit().is_some());
            let [left, right] = is_commutative(&d);
            c.fact("commutative", left.holds && right.holds);
        });
    }
    Ok(finish(report, start))
}

pub fn leib_check(path: &Path) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::new("leib check");
    let json = input::leibniz_json(path, &mut report)?;
    let table = Table::from_triples(json.dim, &json.bracket, "bracket").map_err(|e| anyhow!("{}: {e}", path.display()))?;
    timed(&mut report, "Leibniz identity", |c| {
        let check = check_leibniz(&table);
        c.fact("dim", json.dim);
        c.fact("Lie", check.is_lie());
        c.push(check.identity);
    });
    Ok(finish(report, start))
}

/// Parses a Leibniz algebra; a table that breaks the identity is recorded as
/// a failed check rather than treated as malformed input.
fn leibniz(path: &Path, report: &mut RunReport) -> Result<Option<LeibnizAlgebra>> {
    let json = input::leibniz_json(path, report)?;
    match LeibnizAlgebra::from_json(&json) {
        Ok(l) => Ok(Some(l)),
        Err(Error::LeibnizIdentityFailure(w)) => {
            let mut c = CheckOutcome::new("Leibniz identity");
            c.push(rootgraded::AxiomReport::from_search("Leibniz identity", Some(w)));
            report.add_check(c, None);
            Ok(None)
        }
        Err(e) => bail!("{}: {e}", path.display()),
    }
}

pub fn leib_homology(path: &Path, degree: usize, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::new(format!("leib homology --degree {degree}"));
    let Some(l) = leibniz(path, &mut report)? else {
        return Ok(finish(report, start));
    };
    if degree == 0 {
        bail!("degree must be at least 1");
    }
    timed(&mut report, &format!("HL{degree}"), |c| {
        if let Some(h) = c.absorb("homology", homology(&l, degree, opts.cap)) {
            c.fact("dim", h.dim);
            c.fact("cycles", h.cycles_dim);
            c.fact("boundaries", h.boundaries_dim);
        }
        if degree >= 2 {
            let slices = (degree, degree + 1);
            if let (Some(a), Some(b)) = (
                c.absorb("boundary", boundary(&l, slices.0, opts.cap)),
                c.absorb("boundary", boundary(&l, slices.1, opts.cap)),
            ) {
                c.claim(format!("δ{} δ{} = 0", slices.0, slices.1), a.delta.mul(&b.delta).is_zero(), || {
                    "nonzero product".into()
                });
            }
        }
    });
    Ok(finish(report, start))
}

pub fn leib_uce(path: &Path, out: Option<&Path>, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::new("leib uce");
    let Some(l) = leibniz(path, &mut report)? else {
        return Ok(finish(report, start));
    };
    let mut total = None;
    timed(&mut report, "universal central extension", |c| {
        let Some(u) = c.absorb("uce", universal_central_extension(&l, opts.cap)) else {
            return;
        };
        c.fact("dim", u.extension.total.dim());
        c.fact("HL2", u.hl2);
        c.expect_eq("kernel dimension", u.extension.kernel.dim(), u.hl2);
        let verified = u.extension.verify(&l);
        c.claim("central extension", verified.is_ok(), || format!("{verified:?}"));
        total = Some(u.extension.total);
    });
    if let (Some(out), Some(t)) = (out, total) {
        input::write_json(out, &t.to_json())?;
    }
    Ok(finish(report, start))
}

fn matrix_roots(n: usize, roots: Option<&str>) -> Result<ChevalleyAlgebra> {
    if n < 2 {
        bail!("--n must be at least 2");
    }
    let want = format!("A{}", n - 1);
    if let Some(r) = roots {
        if r != want {
            bail!("matrices of size {n} are graded by {want}, not {r}");
        }
    }
    input::chevalley(&want)
}

fn sidecar_path(out: &Path, suffix: &str) -> PathBuf {
    let stem = out.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
    out.with_file_name(format!("{stem}.{suffix}.json"))
}

/// A built algebra together with its Chevalley embedding, when there is one.
struct Built {
    carrier: LeibnizAlgebra,
    g: Option<ChevalleyAlgebra>,
    embedding: Option<Embedding>,
}

fn construct(what: BuildKind, n: usize, d: &Dialgebra, roots: Option<&str>, opts: &Options) -> Result<Built> {
    let lib = |e: Error| anyhow!("{e}");
    Ok(match what {
        BuildKind::Gl | BuildKind::Sl => {
            // Without --roots the grading is optional; small sizes have none.
            let g = match roots {
                Some(_) => Some(matrix_roots(n, roots)?),
                None => matrix_roots(n, None).ok(),
            };
            let m = if matches!(what, BuildKind::Gl) { build_gl(n, d) } else { build_sl(n, d) }.map_err(lib)?;
            let embedding = g.as_ref().and_then(|g| m.chevalley_embedding(g).ok());
            Built {
                carrier: m.carrier().clone(),
                g,
                embedding,
            }
        }
        BuildKind::Stl => {
            let g = matrix_roots(n, roots)?;
            let m = build_steinberg_model(n, d, opts.cap).map_err(lib)?;
            let embedding = m.chevalley_embedding(&g).ok();
            Built {
                carrier: m.algebra().clone(),
                g: Some(g),
                embedding,
            }
        }
        BuildKind::Tensor => {
            let label = roots.ok_or_else(|| anyhow!("--roots is required for tensor"))?;
            let g = input::chevalley(label)?;
            let t = build_tensor_algebra(&g, d).map_err(lib)?;
            Built {
                carrier: t.carrier().clone(),
                embedding: Some(t.chevalley_embedding()),
                g: Some(g),
            }
        }
    })
}

pub fn build(what: BuildKind, n: usize, dialgebra: &Path, roots: Option<&str>, out: &Path, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::new("build");
    let d = input::dialgebra(dialgebra, &mut report)?;
    let built = construct(what, n, &d, roots, opts)?;
    input::write_json(out, &built.carrier.to_json())?;
    let embedding_file = match (&built.g, &built.embedding) {
        (Some(g), Some(e)) => {
            let path = sidecar_path(out, "embedding");
            input::write_json(&path, &e.to_json(g.root_system()))?;
            Some(path)
        }
        _ => None,
    };
    let name = |p: &Path| p.file_name().map(|s| s.to_string_lossy().into_owned());
    let index = json!({
        "what": what_name(what),
        "n": n,
        "roots": built.g.as_ref().map(|g| g.root_system().label()),
        "dialgebra": report.inputs[0].sha256,
        "basis": built.carrier.basis_names(),
        "embedding": embedding_file.as_deref().and_then(name),
    });
    input::write_json(&sidecar_path(out, "index"), &index)?;
    timed(&mut report, &format!("{} over {}", what_name(what), name(dialgebra).unwrap_or_default()), |c| {
        c.fact("dim", built.carrier.dim());
        if let Some(g) = &built.g {
            c.fact("roots", g.root_system().label());
        }
        c.fact("embedding", embedding_file.is_some());
        c.push(check_leibniz(built.carrier.table()).identity);
    });
    Ok(finish(report, start))
}

fn what_name(what: BuildKind) -> &'static str {
    match what {
        BuildKind::Gl => "gl",
        BuildKind::Sl => "sl",
        BuildKind::Stl => "stl",
        BuildKind::Tensor => "tensor",
    }
}

type Recognized = (GradedDecomposition, CoordinateChart, RecoveredDialgebra);

/// Grades, charts at the first simple root, recovers the products and runs
/// the type-specific comparison.
fn recognition_checks(report: &mut RunReport, l: &LeibnizAlgebra, g: &ChevalleyAlgebra, emb: &Embedding, opts: &Options) -> Option<Recognized> {
    let rs = g.root_system();
    let mut found = None;
    timed(report, "grading", |c| {
        let Some(gd) = c.absorb("root grading", verify_grading(l, g, emb)) else {
            return;
        };
        let dims = &gd.root_space_dims()[..rs.len()];
        c.fact("root space dim", dims[0]);
        c.claim("root spaces have equal dimension", dims.iter().all(|&k| k == dims[0]), || format!("{dims:?}"));
        c.fact("zero space dim", gd.zero_space().dim());
        found = Some(gd);
    });
    let gd = found?;
    let mut chart = None;
    timed(report, "coordinate chart", |c| {
        let opts = ChartOptions {
            seed: opts.seed,
            ..ChartOptions::default()
        };
        if let Some(ch) = c.absorb("chart", build_chart_with(&gd, rs.simple(0), opts)) {
            c.extend(ch.checks().iter().cloned());
            chart = Some(ch);
        }
    });
    let chart = chart?;
    let mut recovered = None;
    timed(report, "coordinate dialgebra", |c| {
        let Some(rd) = c.absorb("products", recover_products(&gd, &chart)) else {
            return;
        };
        c.fact("dim", rd.dialgebra.dim());
        c.extend(rd.checks.iter().cloned());
        c.extend(verify_recovered_identities(&rd, rs));
        c.push(check_cartan_action(&gd, &chart, &rd));
        recovered = Some(rd);
    });
    let rd = recovered?;
    if rs.kind() == RootKind::A {
        timed(report, "type A relations", |c| {
            if let Some(ta) = c.absorb("Steinberg model", check_type_a_relations(&gd, &chart, &rd, opts.cap)) {
                c.extend(ta.relations.iter().cloned());
                c.extend(ta.checks.iter().cloned());
                c.fact("Steinberg model dim", ta.model_dim);
                c.fact("kernel dim", ta.kernel_dim());
            }
        });
    } else {
        timed(report, "tensor map", |c| {
            if let Some(tm) = c.absorb("tensor map", build_tensor_map(&gd, &chart, &rd)) {
                c.extend(tm.checks.iter().cloned());
                c.fact("kernel dim", tm.kernel_dim());
            }
        });
    }
    Some((gd, chart, rd))
}

pub fn recognize(algebra: &Path, embedding: &Path, roots: &str, out: Option<&Path>, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::new(format!("recognize {roots}"));
    let g = input::chevalley(roots)?;
    let Some(l) = leibniz(algebra, &mut report)? else {
        return Ok(finish(report, start));
    };
    let emb_json: EmbeddingJson = input::read_json(embedding, &mut report)?;
    let emb = Embedding::from_json(&emb_json, g.root_system(), l.dim()).map_err(|e| anyhow!("{}: {e}", embedding.display()))?;
    if let Some((_, _, rd)) = recognition_checks(&mut report, &l, &g, &emb, opts) {
        if let Some(out) = out {
            input::write_json(out, &rd.dialgebra.to_json())?;
        }
    }
    Ok(finish(report, start))
}

pub fn roundtrip(what: RoundtripKind, n: usize, dialgebra: &Path, roots: Option<&str>, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::new("roundtrip");
    let d = input::dialgebra(dialgebra, &mut report)?;
    let lib = |e: Error| anyhow!("{e}");
    // For each kind: the algebra, its Chevalley embedding, and `a ↦ x_α(a)`
    // at the first simple root.
    let (l, g, emb, ident): (LeibnizAlgebra, ChevalleyAlgebra, Embedding, Vec<Vec<Q>>) = match what {
        RoundtripKind::Sl => {
            let g = matrix_roots(n, roots)?;
            let m = build_sl(n, &d).map_err(lib)?;
            let emb = m.chevalley_embedding(&g).map_err(lib)?;
            let (i, j) = type_a_indices(g.root_system(), g.root_system().simple(0));
            let ident = (0..d.dim()).map(|k| m.off(i, j, &d.basis_vec(k))).collect();
            (m.carrier().clone(), g, emb, ident)
        }
        RoundtripKind::Stl => {
            let g = matrix_roots(n, roots)?;
            let m = build_steinberg_model(n, &d, opts.cap).map_err(lib)?;
            let emb = m.chevalley_embedding(&g).map_err(lib)?;
            let (i, j) = type_a_indices(g.root_system(), g.root_system().simple(0));
            let ident = (0..d.dim()).map(|k| m.v(i, j, &d.basis_vec(k))).collect();
            (m.algebra().clone(), g, emb, ident)
        }
        RoundtripKind::Tensor => {
            let label = roots.ok_or_else(|| anyhow!("--roots is required for tensor"))?;
            let g = input::chevalley(label)?;
            let t = build_tensor_algebra(&g, &d).map_err(lib)?;
            let e = g.e(g.root_system().simple(0));
            let ident = (0..d.dim()).map(|k| t.basis_elem(e, &d.basis_vec(k))).collect();
            (t.carrier().clone(), g, t.chevalley_embedding(), ident)
        }
    };
    if let Some((gd, chart, rd)) = recognition_checks(&mut report, &l, &g, &emb, opts) {
        timed(&mut report, "comparison with the input dialgebra", |c| {
            compare(c, &gd, &chart, &rd, &d, &ident);
        });
    }
    Ok(finish(report, start))
}

/// Reads each identified element in chart coordinates and checks that the
/// resulting map from the input to the recovered dialgebra is an isomorphism.
fn compare(c: &mut CheckOutcome, gd: &GradedDecomposition, chart: &CoordinateChart, rd: &RecoveredDialgebra, d: &Dialgebra, ident: &[Vec<Q>]) {
    let base = chart.base();
    let images: Option<Vec<Vec<Q>>> = ident.iter().map(|x| chart.coords(gd, base, x)).collect();
    c.claim("identified elements lie in the base root space", images.is_some(), || {
        "an element has no coordinates".into()
    });
    let Some(images) = images else {
        return;
    };
    c.expect_eq("recovered dim", rd.dialgebra.dim(), d.dim());
    let m = Matrix::from_dense(&images);
    c.expect_eq("rank of the identification", rank(&m), d.dim());
    let found = dialg::homomorphism_failure(d, &rd.dialgebra, &images);
    c.push(rootgraded::AxiomReport::from_search("identification preserves both products", found));
}

pub fn acceptance(opts: &Options) -> RunReport {
    let (report, results) = run_all(opts.seed);
    for r in &results {
        eprintln!("{}", r.line());
    }
    report
}
