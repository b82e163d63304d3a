//! The catalog of checked claims.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use triflect::definite::{lemma_search, ortho_complement_roots, short_vectors};
use triflect::diagram::{
    automorphism_count, count_induced_cycles, find_induced, i14, i26, i26_mask, indices, shape_name, I26_A4,
    I26_FREE_12GON, I26_Y555,
};
use triflect::herm::{gram_from_diagram, incidence_null_identities, invariants_match, reduce_mod_two};
use triflect::polygon::{self, area_form, area_of, edge_integrals, equal_weights, random_configuration, regular_points, solve_regular};
use triflect::polytope::{certify, critical_shapes, real_form, weyl_points, Family};
use triflect::reflect::{compatible_reps, element_order, group_closure, rep_from_diagram, verify_relations, Closure};
use triflect::{CoxeterDiagram, EisensteinRing, GaussRing, HermitianLattice, Sqrt3};

use crate::golden::Golden;
use crate::report::{ClaimRecord, Status};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Stated in the literature.
    Published,
    /// Follows by a short hand computation.
    Derived,
    /// Computed once by this implementation and frozen in the golden file.
    Golden,
    /// No expected value.
    Exploratory,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Published => "published",
            Source::Derived => "derived",
            Source::Golden => "golden",
            Source::Exploratory => "exploratory",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub budget_elements: usize,
    pub tol: f64,
    pub golden: Golden,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            budget_elements: 200_000,
            tol: polygon::DEFAULT_TOL,
            golden: Golden::builtin(),
        }
    }
}

type Run = fn(&Settings) -> Result<Value, String>;

pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    pub source: Source,
    pub expected: Value,
    pub run: Run,
}

fn eis(name: &str) -> HermitianLattice<EisensteinRing> {
    gram_from_diagram(&CoxeterDiagram::by_name(name).expect("known diagram")).expect("colored diagram")
}

fn gauss(name: &str) -> HermitianLattice<GaussRing> {
    gram_from_diagram(&CoxeterDiagram::by_name(name).expect("known diagram")).expect("colored diagram")
}

fn i26_lattice() -> HermitianLattice<EisensteinRing> {
    gram_from_diagram(&i26()).expect("I26 is bipartite")
}

fn radicals(range: std::ops::RangeInclusive<usize>) -> Value {
    json!(range.map(|n| eis(&format!("A{n}")).radical_dim()).collect::<Vec<_>>())
}

fn sig(l: &HermitianLattice<impl triflect::QuadraticRing>) -> Value {
    let (p, m, z) = l.signature();
    json!([p, m, z])
}

fn order_of(name: &str, s: &Settings) -> Result<Value, String> {
    let d = CoxeterDiagram::by_name(name).map_err(|e| e.to_string())?;
    let rep = rep_from_diagram(&eis(name).quotient(), &d).map_err(|e| e.to_string())?;
    match group_closure(&rep, s.budget_elements).map_err(|e| e.to_string())? {
        Closure::Finite(n) => Ok(json!(n)),
        Closure::BudgetExceeded(n) => Err(format!("budget of {} elements exceeded ({n} found)", s.budget_elements)),
    }
}

fn mirrors_of(n: usize) -> Result<Value, String> {
    let inv = short_vectors(&eis(&format!("A{n}")), 3).map_err(|e| e.to_string())?;
    if inv.count_of_norm(3) != 6 * inv.mirror_count() {
        return Err("root count is not six times the line count".into());
    }
    Ok(json!(inv.mirror_count()))
}

fn space(name: &str) -> triflect::polytope::RealQuadSpace {
    real_form(&CoxeterDiagram::by_name(name).expect("known diagram")).expect("bipartite")
}

fn twelve_cell_value() -> Sqrt3 {
    let e = Sqrt3::int(3, -2);
    e.clone() * e / (Sqrt3::from(3) * Sqrt3::int(-36, 24))
}

fn relations(d: &CoxeterDiagram) -> Result<Value, String> {
    let l: HermitianLattice<EisensteinRing> = gram_from_diagram(d).map_err(|e| e.to_string())?;
    let rep = rep_from_diagram(&l.quotient(), d).map_err(|e| e.to_string())?;
    let r = verify_relations(&rep, d).map_err(|e| e.to_string())?;
    Ok(json!({"pairs": r.pairs_checked, "failures": r.failures.len()}))
}

/// The full catalog, in report order.
pub fn catalog(g: &Golden) -> Vec<Claim> {
    let mut c = vec![
        Claim {
            id: "kernel.A1-4",
            description: "L(A_n) is nondegenerate for n <= 4",
            source: Source::Published,
            expected: json!([0, 0, 0, 0]),
            run: |_| Ok(radicals(1..=4)),
        },
        Claim {
            id: "kernel.A5",
            description: "L(A_5) has a radical of dimension 1",
            source: Source::Published,
            expected: json!([1]),
            run: |_| Ok(radicals(5..=5)),
        },
        Claim {
            id: "kernel.A6-10",
            description: "L(A_n) is nondegenerate for 6 <= n <= 10",
            source: Source::Published,
            expected: json!([0, 0, 0, 0, 0]),
            run: |_| Ok(radicals(6..=10)),
        },
        Claim {
            id: "kernel.A11",
            description: "L(A_11) has a radical of dimension 1",
            source: Source::Published,
            expected: json!([1]),
            run: |_| Ok(radicals(11..=11)),
        },
        Claim {
            id: "kernel.tildeA11",
            description: "radical dimension of L(tildeA_11)",
            source: Source::Published,
            expected: json!(2),
            run: |_| Ok(json!(eis("tildeA11").radical_dim())),
        },
        Claim {
            id: "kernel.Y555",
            description: "radical dimension of L(Y_555)",
            source: Source::Published,
            expected: json!(2),
            run: |_| Ok(json!(eis("Y555").radical_dim())),
        },
        Claim {
            id: "kernel.I26",
            description: "radical dimension of L(I_26)",
            source: Source::Published,
            expected: json!(12),
            run: |_| Ok(json!(i26_lattice().radical_dim())),
        },
        Claim {
            id: "kernel.Y333G",
            description: "radical dimension of L(Y_333) over the Gauss integers",
            source: Source::Published,
            expected: json!(2),
            run: |_| Ok(json!(gauss("Y333").radical_dim())),
        },
        Claim {
            id: "kernel.I14G",
            description: "radical dimension of L(I_14) over the Gauss integers",
            source: Source::Published,
            expected: json!(6),
            run: |_| {
                let l: HermitianLattice<GaussRing> = gram_from_diagram(&i14()).map_err(|e| e.to_string())?;
                Ok(json!(l.radical_dim()))
            },
        },
        Claim {
            id: "det.chain",
            description: "determinants of L(A_1) .. L(A_12)",
            source: Source::Derived,
            expected: json!(["3", "6", "9", "9", "0", "-27", "-81", "-162", "-243", "-243", "0", "729"]),
            run: |_| Ok(json!((1..=12).map(|n| eis(&format!("A{n}")).det().to_string()).collect::<Vec<_>>())),
        },
        Claim {
            id: "signature.I26",
            description: "quotient of L(I_26) is Lorentzian of rank 14",
            source: Source::Published,
            expected: json!([13, 1, 0]),
            run: |_| Ok(sig(&i26_lattice().quotient().lattice)),
        },
        Claim {
            id: "signature.Y555",
            description: "quotient of L(Y_555) is Lorentzian of rank 14",
            source: Source::Published,
            expected: json!([13, 1, 0]),
            run: |_| Ok(sig(&eis("Y555").quotient().lattice)),
        },
        Claim {
            id: "signature.I26-vs-Y555",
            description: "the two rank-14 quotients share rank, signature, determinant and root data",
            source: Source::Published,
            expected: json!([]),
            run: |_| {
                let a = i26_lattice().quotient().lattice.invariants();
                let b = eis("Y555").quotient().lattice.invariants();
                Ok(json!(invariants_match(&a, &b)))
            },
        },
        Claim {
            id: "signature.tildeA11",
            description: "quotient of L(tildeA_11) is Lorentzian of rank 10",
            source: Source::Published,
            expected: json!([9, 1, 0]),
            run: |_| Ok(sig(&eis("tildeA11").quotient().lattice)),
        },
        Claim {
            id: "signature.Y322G",
            description: "L(Y_322) over the Gauss integers is Lorentzian",
            source: Source::Published,
            expected: json!([7, 1, 0]),
            run: |_| Ok(sig(&gauss("Y322"))),
        },
        Claim {
            id: "nullvec.I26",
            description: "null vectors of the incidence graph pair as expected and span the radical",
            source: Source::Published,
            expected: json!({"failures": 0, "span": 12}),
            run: |_| {
                let r = incidence_null_identities(3).map_err(|e| e.to_string())?;
                Ok(json!({"failures": r.failures.len(), "span": r.span_dim}))
            },
        },
        Claim {
            id: "rep.I26.generators",
            description: "26 triflections on the rank-14 quotient: integral, unitary, order 3",
            source: Source::Published,
            expected: json!({"generators": 26, "failures": 0}),
            run: |_| {
                let d = i26();
                let rep = rep_from_diagram(&i26_lattice().quotient(), &d).map_err(|e| e.to_string())?;
                Ok(json!({"generators": rep.generators.len(), "failures": rep.generator_failures().len()}))
            },
        },
        Claim {
            id: "rep.I26.relations",
            description: "braid and commutation relations for all pairs of I_26 nodes",
            source: Source::Published,
            expected: json!({"pairs": 325, "failures": 0}),
            run: |_| relations(&i26()),
        },
        Claim {
            id: "rep.tildeA11.relations",
            description: "braid and commutation relations for all pairs of tildeA_11 nodes",
            source: Source::Published,
            expected: json!({"pairs": 66, "failures": 0}),
            run: |_| relations(&CoxeterDiagram::by_name("tildeA11").map_err(|e| e.to_string())?),
        },
        Claim {
            id: "rep.compatible",
            description: "A_10, A_11 and tildeA_11 representations agree on shared generators",
            source: Source::Published,
            expected: json!({"ranks": [10, 10, 10], "shared": 21, "failures": 0}),
            run: |_| {
                let cyc = CoxeterDiagram::by_name("tildeA11").map_err(|e| e.to_string())?;
                let labels: Vec<String> = (1..=11).map(|i| i.to_string()).collect();
                let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
                let a11 = cyc.induced_by_labels(&refs).map_err(|e| e.to_string())?;
                let a10 = cyc.induced_by_labels(&refs[..10]).map_err(|e| e.to_string())?;
                let r = compatible_reps::<EisensteinRing>(&[a10, a11, cyc], &refs[..10]).map_err(|e| e.to_string())?;
                Ok(json!({"ranks": r.quotient_ranks, "shared": r.shared_checked, "failures": r.failures.len()}))
            },
        },
        Claim {
            id: "rep.Y322G",
            description: "tetraflections for Y_322 over the Gauss integers: order 4, unitary, relations hold",
            source: Source::Published,
            expected: json!({"generator_failures": 0, "relation_failures": 0}),
            run: |_| {
                let d = CoxeterDiagram::by_name("Y322").map_err(|e| e.to_string())?;
                let rep = rep_from_diagram(&gauss("Y322").quotient(), &d).map_err(|e| e.to_string())?;
                let r = verify_relations(&rep, &d).map_err(|e| e.to_string())?;
                Ok(json!({"generator_failures": rep.generator_failures().len(), "relation_failures": r.failures.len()}))
            },
        },
        Claim {
            id: "closure.L2",
            description: "order of the group generated on L^2",
            source: Source::Golden,
            expected: json!(g.group_orders[0]),
            run: |s| order_of("A2", s),
        },
        Claim {
            id: "closure.L3",
            description: "order of the group generated on L^3",
            source: Source::Golden,
            expected: json!(g.group_orders[1]),
            run: |s| order_of("A3", s),
        },
        Claim {
            id: "closure.L4",
            description: "order of the group generated on L^4",
            source: Source::Golden,
            expected: json!(g.group_orders[2]),
            run: |s| order_of("A4", s),
        },
        Claim {
            id: "closure.degrees",
            description: "the L^4 group order equals the product of the degrees 12, 18, 24, 30",
            source: Source::Published,
            expected: json!(12 * 18 * 24 * 30),
            run: |s| order_of("A4", s),
        },
        Claim {
            id: "mirrors.L1",
            description: "mirror lines of L^1",
            source: Source::Published,
            expected: json!(1),
            run: |_| mirrors_of(1),
        },
        Claim {
            id: "mirrors.L2",
            description: "mirror lines of L^2",
            source: Source::Published,
            expected: json!(4),
            run: |_| mirrors_of(2),
        },
        Claim {
            id: "mirrors.L3",
            description: "mirror lines of L^3",
            source: Source::Published,
            expected: json!(12),
            run: |_| mirrors_of(3),
        },
        Claim {
            id: "mirrors.L4",
            description: "mirror lines of L^4",
            source: Source::Published,
            expected: json!(40),
            run: |_| mirrors_of(4),
        },
        Claim {
            id: "lemma.rank5",
            description: "the only positive definite extension of L^4 by a root is orthogonal",
            source: Source::Published,
            expected: json!({"survivors": [["0", "0", "0", "0"]]}),
            run: |_| {
                let r = lemma_search(3);
                let s: Vec<Vec<String>> = r.positive_definite.iter().map(|c| c.iter().map(|x| x.to_string()).collect()).collect();
                Ok(json!({"survivors": s}))
            },
        },
        Claim {
            id: "lemma.determinant",
            description: "every candidate's determinant is 9 times the closed-form expression",
            source: Source::Derived,
            expected: json!({"candidates": g.lemma_candidates, "det_mismatches": 0, "norm_form_mismatches": 0}),
            run: |_| {
                let r = lemma_search(3);
                Ok(json!({
                    "candidates": r.candidates,
                    "det_mismatches": r.det_mismatches.len(),
                    "norm_form_mismatches": r.norm_form_mismatches.len(),
                }))
            },
        },
        Claim {
            id: "lemma.saturation",
            description: "the sweep result is the same at norm bounds 2, 3 and 4",
            source: Source::Derived,
            expected: json!([true, true, true]),
            run: |_| Ok(json!([2, 3, 4].map(|b| lemma_search(b).passed()))),
        },
        Claim {
            id: "ortho.freegon",
            description: "complement of the free 12-gon in the rank-14 quotient: rank 4, definite, 40 mirrors",
            source: Source::Published,
            expected: json!({"rank": 4, "signature": [4, 0, 0], "mirrors": 40, "det": "9"}),
            run: |_| {
                let d = i26();
                let q = i26_lattice().quotient();
                let sub: Vec<_> = I26_FREE_12GON
                    .iter()
                    .map(|l| q.projection.row(d.index(l).expect("label")).to_vec())
                    .collect();
                let c = ortho_complement_roots(&q.lattice, &sub).map_err(|e| e.to_string())?;
                Ok(json!({"rank": c.lattice.rank(), "signature": c.signature, "mirrors": c.mirrors, "det": c.lattice.det().to_string()}))
            },
        },
        Claim {
            id: "vinberg.12cell",
            description: "the 12-cell has finite volume; every N(A_5) is 2A_5 of rank 8",
            source: Source::Published,
            expected: json!({"verdict": true, "n_types": ["2A5"], "n_ranks": [8]}),
            run: |_| vinberg_summary(&space("tildeA11")),
        },
        Claim {
            id: "vinberg.26cell",
            description: "the 26-cell has finite volume; N(J) is 3A_5 or 4D_4 of rank 12",
            source: Source::Published,
            expected: json!({"verdict": true, "n_types": ["3A5", "4D4"], "n_ranks": [12]}),
            run: |_| vinberg_summary(&real_form(&i26()).map_err(|e| e.to_string())?),
        },
        Claim {
            id: "vinberg.Y555",
            description: "the Y_555 polytope fails the finite-volume test",
            source: Source::Derived,
            expected: json!(false),
            run: |_| {
                let c = triflect::polytope::vinberg_check(&space("Y555")).map_err(|e| e.to_string())?;
                Ok(json!(c.verdict))
            },
        },
        Claim {
            id: "critical.tildeA11",
            description: "critical subsets of tildeA_11 are its 12 A_5 chains",
            source: Source::Published,
            expected: json!({"A5": 12}),
            run: |_| {
                let c = triflect::polytope::vinberg_check(&space("tildeA11")).map_err(|e| e.to_string())?;
                Ok(json!(critical_shapes(&c)))
            },
        },
        Claim {
            id: "critical.I26",
            description: "critical subsets of I_26 are of type A_5 or D_4",
            source: Source::Golden,
            expected: json!({"A5": g.i26_critical_a5, "D4": g.i26_critical_d4}),
            run: |_| {
                let c = triflect::polytope::vinberg_check(&real_form(&i26()).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                Ok(json!(critical_shapes(&c)))
            },
        },
        Claim {
            id: "cusps.26cell",
            description: "the 26-cell has two orbits of ideal vertices, of types 3A_5 and 4D_4",
            source: Source::Published,
            expected: json!(["3A5", "4D4"]),
            run: |_| {
                let c = certify(&real_form(&i26()).map_err(|e| e.to_string())?, None).map_err(|e| e.to_string())?;
                let mut t: Vec<String> = c.orbits.iter().map(|o| o.shape.clone()).collect();
                t.sort();
                Ok(json!(t))
            },
        },
        Claim {
            id: "cusps.26cell.count",
            description: "number of ideal vertices of the 26-cell and orbit sizes",
            source: Source::Golden,
            expected: json!({"cusps": g.twenty_six_cell_cusps, "orbit_sizes": g.twenty_six_cell_orbit_sizes}),
            run: |_| {
                let c = certify(&real_form(&i26()).map_err(|e| e.to_string())?, None).map_err(|e| e.to_string())?;
                let mut sizes: Vec<usize> = c.orbits.iter().map(|o| o.size).collect();
                sizes.sort_unstable_by(|a, b| b.cmp(a));
                Ok(json!({"cusps": c.ideal_vertices.len(), "orbit_sizes": sizes}))
            },
        },
        Claim {
            id: "cusps.12cell",
            description: "number of ideal vertices of the 12-cell",
            source: Source::Golden,
            expected: json!(g.twelve_cell_cusps),
            run: |_| {
                let c = certify(&space("tildeA11"), None).map_err(|e| e.to_string())?;
                Ok(json!(c.ideal_vertices.len()))
            },
        },
        Claim {
            id: "weyl.12cell",
            description: "the sum of the 12-cell roots is equidistant from all 12 facets",
            source: Source::Derived,
            expected: json!({"equidistant": true, "sinh2": twelve_cell_value().to_string()}),
            run: |_| {
                let w = weyl_points(&space("tildeA11"), Family::TwelveCell).map_err(|e| e.to_string())?;
                Ok(json!({"equidistant": w.equidistant, "sinh2": w.invariant}))
            },
        },
        Claim {
            id: "weyl.26cell",
            description: "the 26-cell Weyl point is equidistant from all 26 facets",
            source: Source::Published,
            expected: json!(true),
            run: |_| {
                let w = weyl_points(&real_form(&i26()).map_err(|e| e.to_string())?, Family::TwentySixCell).map_err(|e| e.to_string())?;
                Ok(json!(w.equidistant))
            },
        },
        Claim {
            id: "weyl.face",
            description: "projecting the 26-cell Weyl point to the A_4 face gives the 12-cell Weyl distances",
            source: Source::Published,
            expected: json!({"facets": 12, "values": [twelve_cell_value().to_string()]}),
            run: |_| {
                let s = real_form(&i26()).map_err(|e| e.to_string())?;
                let w = weyl_points(&s, Family::TwentySixCell).map_err(|e| e.to_string())?;
                let w0 = w.w0_exact.ok_or("Weyl point needs a field extension")?;
                let j = i26_mask(&I26_A4);
                let wj = s.face_project(j, &w0).map_err(|e| e.to_string())?;
                let face = indices(s.diagram.zperp(j));
                let mut vals: Vec<String> = face.iter().map(|&i| s.sinh2(&wj, i).to_string()).collect();
                vals.dedup();
                Ok(json!({"facets": face.len(), "values": vals}))
            },
        },
        Claim {
            id: "aut.I26",
            description: "automorphisms of I_26 preserving and ignoring the coloring",
            source: Source::Published,
            expected: json!([5616, 11232]),
            run: |_| Ok(json!([automorphism_count(&i26(), true), automorphism_count(&i26(), false)])),
        },
        Claim {
            id: "aut.I14",
            description: "automorphisms of I_14",
            source: Source::Published,
            expected: json!(336),
            run: |_| Ok(json!(automorphism_count(&i14(), false))),
        },
        Claim {
            id: "diagram.zperp",
            description: "Z(A_4) is the free 12-gon and Z(Z(A_4)) = A_4",
            source: Source::Published,
            expected: json!({"z": "tildeA11", "zz": "A4"}),
            run: |_| {
                let d = i26();
                let z = d.zperp(i26_mask(&I26_A4));
                Ok(json!({"z": shape_name(&d, z), "zz": shape_name(&d, d.zperp(z))}))
            },
        },
        Claim {
            id: "diagram.named",
            description: "the named node sets induce Y_555, 3A_5 and 4D_4",
            source: Source::Published,
            expected: json!(["Y555", "3A5", "4D4"]),
            run: |_| {
                let d = i26();
                let three = i26_mask(&["b1", "c1", "d1", "e1", "f1", "b2", "c2", "d2", "e2", "f2", "b3", "c3", "d3", "e3", "f3"]);
                let four = i26_mask(&["a", "b1", "b2", "b3", "e1", "d1", "f1", "z1", "e2", "d2", "f2", "z2", "e3", "d3", "f3", "z3"]);
                Ok(json!([shape_name(&d, i26_mask(&I26_Y555)), shape_name(&d, three), shape_name(&d, four)]))
            },
        },
        Claim {
            id: "diagram.Y555maximal",
            description: "the named Y_555 is an induced tree of I_26 that no node extends",
            source: Source::Derived,
            expected: json!({"tree": true, "extensions": []}),
            run: |_| {
                let d = i26();
                let y = i26_mask(&I26_Y555);
                Ok(json!({"tree": d.is_induced_tree(y), "extensions": d.labels_of(d.tree_extensions(y))}))
            },
        },
        Claim {
            id: "diagram.freegons",
            description: "free 12-gons in I_26, counted by two enumerators",
            source: Source::Golden,
            expected: json!([g.free_12gon_count, g.free_12gon_count]),
            run: |_| {
                let d = i26();
                let e = find_induced(&d, &CoxeterDiagram::by_name("tildeA11").map_err(|e| e.to_string())?, None);
                Ok(json!([e.maps.len(), count_induced_cycles(&d, 12)]))
            },
        },
        Claim {
            id: "mod2.Y322G",
            description: "L(Y_322) mod (1+i) is a minus-type quadratic space preserved by the tetraflections",
            source: Source::Published,
            expected: json!({"dim": 8, "type": "minus", "singular": 119, "preserved": true}),
            run: |_| {
                let d = CoxeterDiagram::by_name("Y322").map_err(|e| e.to_string())?;
                let rep = rep_from_diagram(&gauss("Y322").quotient(), &d).map_err(|e| e.to_string())?;
                let s = reduce_mod_two(&rep.lattice, &rep.generators).map_err(|e| e.to_string())?;
                Ok(json!({
                    "dim": s.dim,
                    "type": s.kind,
                    "singular": s.singular_nonzero(),
                    "preserved": s.preserves_q.iter().all(|&b| b),
                }))
            },
        },
        Claim {
            id: "polygon.rectangle",
            description: "equal weights 1/2 give a rectangle",
            source: Source::Derived,
            expected: json!(true),
            run: |s| {
                let d = edge_integrals(&[-1.0, 0.0, 1.0, 2.0], &[0.5; 4], s.tol).map_err(|e| e.to_string())?;
                Ok(json!(d.interior_angles().iter().all(|a| (a - std::f64::consts::FRAC_PI_2).abs() <= 1e-8)))
            },
        },
        Claim {
            id: "polygon.closure12",
            description: "closure residuals below 1e-6 for 12 equal weights",
            source: Source::Published,
            expected: json!(true),
            run: |s| {
                let z: Vec<f64> = (1..=12).map(|k| k as f64).collect();
                let d = edge_integrals(&z, &equal_weights(12), s.tol.min(1e-10)).map_err(|e| e.to_string())?;
                let (a, b) = d.closure_residuals();
                Ok(json!(a <= 1e-6 && b <= 1e-6))
            },
        },
        Claim {
            id: "polygon.signature",
            description: "minus the area is Lorentzian on the 10-dimensional closure space",
            source: Source::Published,
            expected: json!([9, 1, 0]),
            run: |_| {
                let a = area_form(&equal_weights(12), 200, 1).map_err(|e| e.to_string())?;
                Ok(json!(a.signature))
            },
        },
        Claim {
            id: "polygon.area",
            description: "the area form is positive on 200 random genuine polygons",
            source: Source::Published,
            expected: json!(200),
            run: |s| {
                let mut rng = ChaCha8Rng::seed_from_u64(2024);
                let mut good = 0;
                for _ in 0..200 {
                    let n = rng.gen_range(4..=12);
                    let (mu, z) = random_configuration(&mut rng, n);
                    let d = edge_integrals(&z, &mu, s.tol).map_err(|e| e.to_string())?;
                    if area_of(&mu, &d.lengths) > 0.0 {
                        good += 1;
                    }
                }
                Ok(json!(good))
            },
        },
        Claim {
            id: "polygon.regular12",
            description: "a configuration with all 12 edge lengths equal exists",
            source: Source::Golden,
            expected: json!(true),
            run: |s| {
                let g = &s.golden;
                let exact = regular_points(12);
                let start: Vec<f64> = exact
                    .iter()
                    .enumerate()
                    .map(|(k, x)| if k < 3 { *x } else { x + 0.01 * ((k * 7 % 5) as f64 - 2.0) })
                    .collect();
                let r = solve_regular(12, &start, 1e-9).map_err(|e| e.to_string())?;
                let close = r.z.iter().zip(&g.regular_12gon_z).all(|(a, b)| (a - b).abs() < 1e-6);
                Ok(json!(r.spread < 1e-6 && close))
            },
        },
        Claim {
            id: "spider.order",
            description: "order of the image of the spider element in U(L)",
            source: Source::Exploratory,
            expected: Value::Null,
            run: |s| {
                let d = i26();
                let rep = rep_from_diagram(&i26_lattice().quotient(), &d).map_err(|e| e.to_string())?;
                let word = ["a", "b1", "c1", "a", "b2", "c2", "a", "b3", "c3"];
                let mut m = rep.generator(word[0]).ok_or("label")?.clone();
                for l in &word[1..] {
                    m = m.mul(rep.generator(l).ok_or("label")?);
                }
                Ok(match element_order(&m, s.budget_elements as u64) {
                    Some(k) => json!(k),
                    None => json!(format!("above {}", s.budget_elements)),
                })
            },
        },
    ];
    c.shrink_to_fit();
    c
}

fn vinberg_summary(s: &triflect::polytope::RealQuadSpace) -> Result<Value, String> {
    let c = triflect::polytope::vinberg_check(s).map_err(|e| e.to_string())?;
    let mut types: Vec<String> = c.critical.iter().map(|x| x.n_shape.clone()).collect();
    types.sort();
    types.dedup();
    let mut ranks: Vec<usize> = c.critical.iter().map(|x| x.n_rank).collect();
    ranks.sort();
    ranks.dedup();
    Ok(json!({"verdict": c.verdict, "n_types": types, "n_ranks": ranks}))
}

/// Runs every claim whose id matches `filter`, in parallel, and returns the
/// records in catalog order. Claims matching `skip` are listed as skipped.
pub fn run_claims(
    catalog: &[Claim],
    filter: Option<&glob::Pattern>,
    skip: Option<&glob::Pattern>,
    settings: &Settings,
) -> Vec<ClaimRecord> {
    let chosen: Vec<&Claim> = catalog.iter().filter(|c| filter.is_none_or(|p| p.matches(c.id))).collect();
    chosen
        .par_iter()
        .map(|c| {
            let base = ClaimRecord {
                id: c.id.to_string(),
                description: c.description.to_string(),
                source: c.source.as_str().to_string(),
                expected: c.expected.clone(),
                computed: Value::Null,
                status: Status::Skipped,
                reason: None,
                wall_ms: 0,
            };
            if skip.is_some_and(|p| p.matches(c.id)) {
                return base;
            }
            let start = Instant::now();
            let out = std::panic::catch_unwind(|| (c.run)(settings)).unwrap_or_else(|_| Err("panicked".into()));
            let wall_ms = start.elapsed().as_millis() as u64;
            let (computed, status, reason) = match out {
                Ok(v) if c.source == Source::Exploratory => (v, Status::Exploratory, None),
                Ok(v) if v == c.expected => (v, Status::Pass, None),
                Ok(v) => (v, Status::Fail, Some("computed value differs from expected".to_string())),
                Err(e) if c.source == Source::Exploratory => (Value::Null, Status::Exploratory, Some(e)),
                Err(e) => (Value::Null, Status::Fail, Some(e)),
            };
            ClaimRecord {
                computed,
                status,
                reason,
                wall_ms,
                ..base
            }
        })
        .collect()
}

/// Recomputes every golden value.
pub fn regenerate_golden(settings: &Settings) -> Result<Golden, String> {
    let d = i26();
    let free = find_induced(&d, &CoxeterDiagram::by_name("tildeA11").map_err(|e| e.to_string())?, None).maps.len();
    if free as u64 != count_induced_cycles(&d, 12) {
        return Err("free 12-gon enumerators disagree".into());
    }
    let orders = ["A2", "A3", "A4"]
        .iter()
        .map(|n| order_of(n, settings).map(|v| v.as_u64().unwrap_or(0) as usize))
        .collect::<Result<Vec<_>, _>>()?;
    let c12 = certify(&space("tildeA11"), None).map_err(|e| e.to_string())?;
    let c26 = certify(&real_form(&d).map_err(|e| e.to_string())?, None).map_err(|e| e.to_string())?;
    let shapes = critical_shapes(&c26);
    let mut sizes: Vec<usize> = c26.orbits.iter().map(|o| o.size).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let exact = regular_points(12);
    let start: Vec<f64> = exact
        .iter()
        .enumerate()
        .map(|(k, x)| if k < 3 { *x } else { x + 0.01 * ((k * 7 % 5) as f64 - 2.0) })
        .collect();
    let reg = solve_regular(12, &start, 1e-9).map_err(|e| e.to_string())?;
    Ok(Golden {
        free_12gon_count: free,
        group_orders: orders,
        twelve_cell_cusps: c12.ideal_vertices.len(),
        twenty_six_cell_cusps: c26.ideal_vertices.len(),
        twenty_six_cell_orbit_sizes: sizes,
        i26_critical_a5: shapes.get("A5").copied().unwrap_or(0),
        i26_critical_d4: shapes.get("D4").copied().unwrap_or(0),
        lemma_candidates: lemma_search(3).candidates,
        regular_12gon_z: reg.z,
    })
}
