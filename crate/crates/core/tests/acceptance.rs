//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use triflect::definite::{lemma_search, mirror_count, ortho_complement_roots, short_vectors};
use triflect::diagram::{
    automorphism_count, count_induced_cycles, find_induced, i14, i26, i26_mask, indices, shape_name, I26_A4,
    I26_FREE_12GON, I26_Y555,
};
use triflect::herm::{gram_from_diagram, incidence_null_identities, invariants_match, reduce_mod_two, QuadraticType};
use triflect::linalg::{self, Mat};
use triflect::polygon::{self, area_form, area_of, edge_integrals, equal_weights, random_configuration};
use triflect::polytope::{certify, critical_shapes, real_form, vinberg_check, Family, RealQuadSpace};
use triflect::reflect::{compatible_reps, group_closure, rep_from_diagram, verify_relations, Closure};
use triflect::{CoxeterDiagram, EisensteinRing, GaussRing, HermitianLattice, Sqrt3};

/// Frozen number of induced 12-cycles in `I_26`.
const FREE_12GON_GOLDEN: usize = 468;
/// Frozen number of cusps of the 12-cell.
const TWELVE_CELL_CUSPS: usize = 6;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn eis(name: &str) -> HermitianLattice<EisensteinRing> {
    gram_from_diagram(&CoxeterDiagram::by_name(name).unwrap()).unwrap()
}

fn gauss(name: &str) -> HermitianLattice<GaussRing> {
    gram_from_diagram(&CoxeterDiagram::by_name(name).unwrap()).unwrap()
}

fn kernel_dimensions() -> Outcome {
    for n in 1..=11 {
        let want = if n == 5 || n == 11 { 1 } else { 0 };
        let got = eis(&format!("A{n}")).radical_dim();
        ensure(got == want, format!("A{n}: radical {got}, want {want}"))?;
    }
    let cases: Vec<(&str, usize, usize)> = vec![
        ("tildeA11", eis("tildeA11").radical_dim(), 2),
        ("Y555", eis("Y555").radical_dim(), 2),
        ("I26", gram_from_diagram::<EisensteinRing>(&i26()).unwrap().radical_dim(), 12),
        ("Y333/G", gauss("Y333").radical_dim(), 2),
        ("I14/G", gram_from_diagram::<GaussRing>(&i14()).unwrap().radical_dim(), 6),
    ];
    for (name, got, want) in &cases {
        ensure(got == want, format!("{name}: radical {got}, want {want}"))?;
    }
    Ok("A1..A11, tildeA11=2, Y555=2, I26=12, Y333/G=2, I14/G=6".into())
}

fn signatures() -> Outcome {
    let i = gram_from_diagram::<EisensteinRing>(&i26()).unwrap();
    let y = eis("Y555");
    let (qi, qy) = (i.quotient().lattice, y.quotient().lattice);
    ensure(qi.rank() == 14 && qy.rank() == 14, "quotient ranks")?;
    ensure(qi.signature() == (13, 1, 0), format!("I26 {:?}", qi.signature()))?;
    ensure(qy.signature() == (13, 1, 0), format!("Y555 {:?}", qy.signature()))?;
    let diff = invariants_match(&qi.invariants(), &qy.invariants());
    ensure(diff.is_empty(), format!("invariants differ: {diff:?}"))?;
    let qa = eis("tildeA11").quotient().lattice;
    ensure(qa.rank() == 10 && qa.signature() == (9, 1, 0), format!("tildeA11 {:?}", qa.signature()))?;
    let g = gauss("Y322");
    ensure(g.signature() == (7, 1, 0), format!("Y322/G {:?}", g.signature()))?;
    Ok(format!("I26, Y555 -> (13,1), det {}; tildeA11 -> (9,1); Y322/G -> (7,1)", qi.det()))
}

fn null_vectors() -> Outcome {
    let r = incidence_null_identities(3).map_err(|e| e.to_string())?;
    ensure(r.passed(), format!("{:?}", r.failures))?;
    ensure(r.span_dim == 12, format!("span dimension {}", r.span_dim))?;
    Ok(format!(
        "{} Hermitian and {} real pairings, span dimension {}",
        r.pairings_checked, r.real_pairings_checked, r.span_dim
    ))
}

fn representations() -> Outcome {
    let d = i26();
    let l = gram_from_diagram::<EisensteinRing>(&d).unwrap();
    let rep = rep_from_diagram(&l.quotient(), &d).map_err(|e| e.to_string())?;
    ensure(rep.generator_failures().is_empty(), format!("{:?}", rep.generator_failures()))?;
    let r = verify_relations(&rep, &d).unwrap();
    ensure(r.pairs_checked == 325 && r.failures.is_empty(), format!("I26 {r:?}"))?;

    let cyc = CoxeterDiagram::by_name("tildeA11").unwrap();
    let rep = rep_from_diagram(&eis("tildeA11").quotient(), &cyc).unwrap();
    ensure(rep.generator_failures().is_empty(), format!("{:?}", rep.generator_failures()))?;
    let r = verify_relations(&rep, &cyc).unwrap();
    ensure(r.pairs_checked == 66 && r.failures.is_empty(), format!("tildeA11 {r:?}"))?;
    ensure(cyc.adjacent(cyc.index("0").unwrap(), cyc.index("11").unwrap()), "wrap-around bond")?;

    let y = CoxeterDiagram::by_name("Y322").unwrap();
    let rep = rep_from_diagram(&gauss("Y322").quotient(), &y).unwrap();
    ensure(rep.generator_failures().is_empty(), format!("Y322/G {:?}", rep.generator_failures()))?;
    ensure(verify_relations(&rep, &y).unwrap().failures.is_empty(), "Y322/G relations")?;

    let labels: Vec<String> = (1..=11).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let a11 = cyc.induced_by_labels(&refs).unwrap();
    let a10 = cyc.induced_by_labels(&refs[..10]).unwrap();
    let c = compatible_reps::<EisensteinRing>(&[a10, a11, cyc], &refs[..10]).map_err(|e| e.to_string())?;
    ensure(c.failures.is_empty() && c.quotient_ranks == vec![10, 10, 10], format!("{c:?}"))?;
    Ok(format!("325 + 66 pairs, {} shared generators identical", c.shared_checked))
}

fn closures() -> Outcome {
    let mut got = Vec::new();
    for name in ["A2", "A3", "A4"] {
        let d = CoxeterDiagram::by_name(name).unwrap();
        let rep = rep_from_diagram(&eis(name).quotient(), &d).unwrap();
        match group_closure(&rep, 200_000).map_err(|e| e.to_string())? {
            Closure::Finite(n) => got.push(n),
            Closure::BudgetExceeded(n) => return Err(format!("{name}: budget exceeded at {n}")),
        }
    }
    ensure(got == vec![24, 648, 155_520], format!("{got:?}"))?;
    ensure(12 * 18 * 24 * 30 == got[2], "degree product")?;
    Ok(format!("{got:?}"))
}

fn mirrors() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=4 {
        let inv = short_vectors(&eis(&format!("A{n}")), 3).map_err(|e| e.to_string())?;
        ensure(inv.vectors.len() == inv.count_of_norm(3), "vectors of norm below 3")?;
        ensure(inv.count_of_norm(3) == 6 * inv.mirror_count(), "count not 6x lines")?;
        counts.push(inv.mirror_count());
    }
    ensure(counts == vec![1, 4, 12, 40], format!("{counts:?}"))?;
    Ok(format!("{counts:?}"))
}

fn lemma() -> Outcome {
    let r = lemma_search(3);
    ensure(r.det_mismatches.is_empty(), format!("{} determinant mismatches", r.det_mismatches.len()))?;
    ensure(r.norm_form_mismatches.is_empty(), format!("{} norm-form mismatches", r.norm_form_mismatches.len()))?;
    ensure(r.passed(), format!("survivors {:?}", r.positive_definite))?;
    Ok(format!("{} candidates, unique survivor (0,0,0,0)", r.candidates))
}

fn orthocomplement() -> Outcome {
    let d = i26();
    let q = gram_from_diagram::<EisensteinRing>(&d).unwrap().quotient();
    let sub: Vec<_> = I26_FREE_12GON.iter().map(|l| q.projection.row(d.index(l).unwrap()).to_vec()).collect();
    let c = ortho_complement_roots(&q.lattice, &sub).map_err(|e| e.to_string())?;
    ensure(c.lattice.rank() == 4, format!("rank {}", c.lattice.rank()))?;
    ensure(c.signature == (4, 0, 0), format!("signature {:?}", c.signature))?;
    ensure(c.mirrors == Some(40), format!("mirrors {:?}", c.mirrors))?;
    let l4 = eis("A4");
    ensure(c.lattice.det() == l4.det(), format!("det {} vs {}", c.lattice.det(), l4.det()))?;
    ensure(mirror_count(&l4).unwrap() == 40, "L4 mirrors")?;
    let all: Vec<_> = (0..26).map(|i| q.projection.row(i).to_vec()).collect();
    let z = ortho_complement_roots(&q.lattice, &all).map_err(|e| e.to_string())?;
    ensure(z.lattice.rank() == 0, "complement of everything")?;
    Ok(format!("rank 4, positive definite, 40 mirrors, det {}", c.lattice.det()))
}

fn vinberg() -> Outcome {
    let s12 = real_form(&CoxeterDiagram::by_name("tildeA11").unwrap()).unwrap();
    let c12 = vinberg_check(&s12).map_err(|e| e.to_string())?;
    ensure(c12.verdict, "12-cell verdict")?;
    ensure(c12.critical.len() == 12 && critical_shapes(&c12).keys().eq(["A5"].iter()), "12-cell inventory")?;
    ensure(c12.critical.iter().all(|c| c.n_shape == "2A5" && c.n_rank == 8), "12-cell N(J)")?;

    let s26 = real_form(&i26()).unwrap();
    let c26 = vinberg_check(&s26).map_err(|e| e.to_string())?;
    ensure(c26.verdict, "26-cell verdict")?;
    let shapes = critical_shapes(&c26);
    ensure(shapes.keys().eq(["A5", "D4"].iter()), format!("26-cell shapes {shapes:?}"))?;
    for c in &c26.critical {
        let want = if c.subset.shape == "A5" { "3A5" } else { "4D4" };
        ensure(c.n_shape == want && c.n_rank == 12, format!("{:?}: {} rank {}", c.subset.labels, c.n_shape, c.n_rank))?;
    }

    let sy = real_form(&CoxeterDiagram::by_name("Y555").unwrap()).unwrap();
    ensure(sy.dim() == 14, "Y555 dimension")?;
    let cy = vinberg_check(&sy).map_err(|e| e.to_string())?;
    ensure(!cy.verdict, "Y555 verdict should be false")?;
    Ok(format!("12-cell true, 26-cell true ({shapes:?}), Y555 false"))
}

fn cusps() -> Outcome {
    let s26 = real_form(&i26()).unwrap();
    let c = certify(&s26, None).map_err(|e| e.to_string())?;
    ensure(c.orbits.len() == 2, format!("{} orbits", c.orbits.len()))?;
    let mut types: Vec<&str> = c.orbits.iter().map(|o| o.shape.as_str()).collect();
    types.sort();
    ensure(types == ["3A5", "4D4"], format!("{types:?}"))?;
    let s12 = real_form(&CoxeterDiagram::by_name("tildeA11").unwrap()).unwrap();
    let c12 = certify(&s12, None).map_err(|e| e.to_string())?;
    ensure(c12.ideal_vertices.len() == TWELVE_CELL_CUSPS, format!("12-cell cusps {}", c12.ideal_vertices.len()))?;
    let sizes: Vec<usize> = c.orbits.iter().map(|o| o.size).collect();
    Ok(format!("{} cusps in orbits {types:?} of sizes {sizes:?}", c.ideal_vertices.len()))
}

fn twelve_cell_value() -> Sqrt3 {
    let e = Sqrt3::int(3, -2);
    e.clone() * e / (Sqrt3::from(3) * Sqrt3::int(-36, 24))
}

fn facet_value_of(space: &RealQuadSpace, w: &[Sqrt3], nodes: &[usize]) -> Vec<Sqrt3> {
    nodes.iter().map(|&i| space.sinh2(w, i)).collect()
}

fn weyl() -> Outcome {
    let want = twelve_cell_value();
    let s12 = real_form(&CoxeterDiagram::by_name("tildeA11").unwrap()).unwrap();
    let w = triflect::polytope::weyl_points(&s12, Family::TwelveCell).map_err(|e| e.to_string())?;
    let w0 = w.w0_exact.clone().unwrap();
    ensure(s12.pair(&w0, &w0) == Sqrt3::int(36, -24), "<w0,w0>")?;
    ensure(w.sinh2_exact.as_ref().unwrap().iter().all(|x| *x == want), "12-cell distances")?;

    let s26 = real_form(&i26()).unwrap();
    let w = triflect::polytope::weyl_points(&s26, Family::TwentySixCell).map_err(|e| e.to_string())?;
    ensure(w.equidistant, "26-cell equidistance")?;
    let w0 = w.w0_exact.clone().ok_or("w0 left the base field")?;
    // w_P is proportional to 4√3 Σ e_p + 3 Σ e_l
    let colors = s26.diagram.colors().unwrap().to_vec();
    let guess = s26.combine(
        &(0..26)
            .map(|i| (i, if colors[i] == triflect::diagram::Color::Black { Sqrt3::int(0, 4) } else { Sqrt3::from(3) }))
            .collect::<Vec<_>>(),
    );
    let wp: Vec<Sqrt3> = w.w_p.as_ref().unwrap().iter().map(|s| Sqrt3::parse(s).unwrap()).collect();
    ensure(linalg::rank(&Mat::from_rows(vec![wp, guess.clone()])) == 1, "w_P direction")?;
    ensure(s26.pair(&guess, s26.node(0)).is_zero(), "w_P against a point")?;

    let j = i26_mask(&I26_A4);
    let wj = s26.face_project(j, &w0).map_err(|e| e.to_string())?;
    let face = indices(s26.diagram.zperp(j));
    ensure(face.len() == 12, "face facets")?;
    let vals = facet_value_of(&s26, &wj, &face);
    ensure(vals.iter().all(|x| *x == want), format!("face distances {}", vals[0]))?;
    for i in 0..26 {
        let f = triflect::polytope::facet_distance(&s26, &w0, i).map_err(|e| e.to_string())?;
        ensure(f == s26.sinh2(&w0, i), "facet projection consistency")?;
    }
    Ok(format!("12-cell sinh^2 = {want}; 26-cell sinh^2 = {}; A4 face matches 12-cell", w.invariant))
}

fn combinatorics() -> Outcome {
    let d = i26();
    let a = automorphism_count(&d, true);
    let b = automorphism_count(&d, false);
    ensure((a, b) == (5616, 11232), format!("I26 {a}/{b}"))?;
    let c = automorphism_count(&i14(), false);
    ensure(c == 168 * 2, format!("I14 {c}"))?;
    let a4 = i26_mask(&I26_A4);
    let g = i26_mask(&I26_FREE_12GON);
    ensure(d.zperp(a4) == g && shape_name(&d, g) == "tildeA11", "Z(A4)")?;
    ensure(d.zperp(d.zperp(a4)) == a4, "Z(Z(A4))")?;
    ensure(shape_name(&d, i26_mask(&I26_Y555)) == "Y555", "Y555")?;
    let three = i26_mask(&["b1", "c1", "d1", "e1", "f1", "b2", "c2", "d2", "e2", "f2", "b3", "c3", "d3", "e3", "f3"]);
    ensure(shape_name(&d, three) == "3A5", "3A5")?;
    let four = i26_mask(&["a", "b1", "b2", "b3", "e1", "d1", "f1", "z1", "e2", "d2", "f2", "z2", "e3", "d3", "f3", "z3"]);
    ensure(shape_name(&d, four) == "4D4", "4D4")?;
    let e = find_induced(&d, &CoxeterDiagram::by_name("tildeA11").unwrap(), None);
    let naive = count_induced_cycles(&d, 12) as usize;
    ensure(e.complete && e.maps.len() == FREE_12GON_GOLDEN && naive == FREE_12GON_GOLDEN, format!("12-gons {} / {naive}", e.maps.len()))?;
    Ok(format!("|Aut| 5616/11232, I14 336, {FREE_12GON_GOLDEN} free 12-gons"))
}

fn mod_two() -> Outcome {
    let d = CoxeterDiagram::by_name("Y322").unwrap();
    let l = gauss("Y322");
    let rep = rep_from_diagram(&l.quotient(), &d).unwrap();
    let s = reduce_mod_two(&rep.lattice, &rep.generators).map_err(|e| e.to_string())?;
    ensure(s.dim == 8, format!("dim {}", s.dim))?;
    ensure(s.kind == QuadraticType::Minus, format!("{:?}", s.kind))?;
    ensure(s.singular_nonzero() == 119, format!("{} singular", s.singular_nonzero()))?;
    ensure(s.preserves_q.iter().all(|&b| b), "tetraflection breaks q")?;
    Ok(format!("dim 8, minus type, 119 singular, {} generators preserve q", s.preserves_q.len()))
}

fn polygons() -> Outcome {
    let r = edge_integrals(&[-1.0, 0.0, 1.0, 2.0], &[0.5; 4], polygon::DEFAULT_TOL).map_err(|e| e.to_string())?;
    let worst = r.interior_angles().iter().map(|a| (a - std::f64::consts::FRAC_PI_2).abs()).fold(0.0, f64::max);
    ensure(worst <= 1e-8, format!("rectangle angle error {worst:e}"))?;
    let z: Vec<f64> = (1..=12).map(|k| k as f64).collect();
    let p = edge_integrals(&z, &equal_weights(12), 1e-10).map_err(|e| e.to_string())?;
    let (r1, r2) = p.closure_residuals();
    ensure(r1 <= 1e-6 && r2 <= 1e-6, format!("residuals {r1:e} {r2:e}"))?;
    let sig = area_form(&equal_weights(12), 200, 1).map_err(|e| e.to_string())?;
    ensure(sig.dim == 10 && sig.signature == (9, 1, 0), format!("{:?}", sig.signature))?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..200 {
        let n = rng.gen_range(4..=12);
        let (mu, z) = random_configuration(&mut rng, n);
        let d = edge_integrals(&z, &mu, polygon::DEFAULT_TOL).map_err(|e| format!("sample {k}: {e}"))?;
        let q = area_of(&mu, &d.lengths);
        ensure(q > 0.0, format!("sample {k}: Q = {q}"))?;
    }
    Ok(format!("angle error {worst:.1e}, residuals {r1:.1e}/{r2:.1e}, (9,1), 200 positive areas"))
}

fn main() {
    let criteria: Vec<(u32, &str, u64, fn() -> Outcome)> = vec![
        (1, "kernel dimensions", 5, kernel_dimensions),
        (2, "signatures", 0, signatures),
        (3, "null-vector identities", 0, null_vectors),
        (4, "representations", 30, representations),
        (5, "finite group closure", 60, closures),
        (6, "mirror counts", 10, mirrors),
        (7, "rank-5 extension", 60, lemma),
        (8, "orthogonal complement", 0, orthocomplement),
        (9, "Vinberg certificates", 120, vinberg),
        (10, "ideal vertices", 0, cusps),
        (11, "Weyl geometry", 0, weyl),
        (12, "diagram combinatorics", 60, combinatorics),
        (13, "mod (1+i) reduction", 5, mod_two),
        (14, "polygon numerics", 0, polygons),
    ];
    let mut failed = 0;
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let took = start.elapsed();
        let out = match out {
            Ok(s) if limit > 0 && took > Duration::from_secs(limit) => Err(format!("{s}; over the {limit} s limit")),
            o => o,
        };
        match out {
            Ok(s) => println!("criterion {id:>2} PASS {name}: {s} [{:.2} s]", took.as_secs_f64()),
            Err(s) => {
                failed += 1;
                println!("criterion {id:>2} FAIL {name}: {s} [{:.2} s]", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 14 criteria passed");
}
