//! Real Lorentzian spaces over Q(sqrt 3) attached to bipartite diagrams,
//! Vinberg's finite-volume test, cusps, and Weyl points.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{automorphisms, bit, indices, permute_mask, shape_name, Color, CoxeterDiagram, DiagramError, NodeSet};
use crate::linalg::{self, Mat};
use crate::scalar::{OrderedField, Sign, Sqrt3, Tower};

#[derive(Debug, Error)]
pub enum PolytopeError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("space is not Lorentzian: signature ({0}, {1})")]
    NotLorentzian(usize, usize),
    #[error("subset {0:?} is not elliptic")]
    NotElliptic(Vec<String>),
    #[error("point does not have negative norm")]
    NotTimelike,
    #[error("finite-volume certificate is false")]
    CertificateFalse,
    #[error("degenerate solve: {0}")]
    Degenerate(String),
}

/// Gram of the generators: 3 on the diagonal, `−√3` per edge.
pub fn real_gram(d: &CoxeterDiagram) -> Mat<Sqrt3> {
    let n = d.len();
    Mat::from_fn(n, n, |i, j| {
        if i == j {
            Sqrt3::from(3)
        } else if d.adjacent(i, j) {
            -Sqrt3::sqrt3()
        } else {
            Sqrt3::zero()
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubsetType {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

fn type_of(sig: (usize, usize, usize)) -> SubsetType {
    match sig {
        (_, 0, 0) => SubsetType::Elliptic,
        (_, 0, _) => SubsetType::Parabolic,
        _ => SubsetType::Hyperbolic,
    }
}

#[derive(Clone, Debug)]
pub struct RealQuadSpace {
    pub diagram: CoxeterDiagram,
    /// Gram of all generators.
    pub gram: Mat<Sqrt3>,
    /// Generators forming a basis of the radical quotient.
    pub basis: Vec<usize>,
    /// Gram of the quotient on that basis.
    pub form: Mat<Sqrt3>,
    /// Coordinates of each generator in the quotient basis.
    pub coords: Vec<Vec<Sqrt3>>,
    pub signature: (usize, usize),
}

pub fn real_form(d: &CoxeterDiagram) -> Result<RealQuadSpace, PolytopeError> {
    d.require_colors()?;
    let gram = real_gram(d);
    let n = d.len();
    let basis = linalg::independent_rows(&gram);
    let r = basis.len();
    let gbt = Mat::from_fn(n, r, |j, k| gram.get(basis[k], j).clone());
    let coords = (0..n)
        .map(|i| linalg::solve(&gbt, gram.row(i)).ok_or_else(|| PolytopeError::Degenerate("generator outside row space".into())))
        .collect::<Result<Vec<_>, _>>()?;
    let form = gram.principal(&basis);
    let (p, m, z) = linalg::sym_signature(&form);
    debug_assert_eq!(z, 0);
    Ok(RealQuadSpace {
        diagram: d.clone(),
        gram,
        basis,
        form,
        coords,
        signature: (p, m),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SubsetClass {
    #[serde(skip)]
    pub mask: NodeSet,
    pub labels: Vec<String>,
    pub shape: String,
    #[serde(rename = "class")]
    pub kind: SubsetType,
    pub components: Vec<(String, SubsetType)>,
    pub rank: usize,
}

impl RealQuadSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_lorentzian(&self) -> bool {
        self.signature.1 == 1 && self.signature.0 + 1 == self.dim()
    }

    pub fn pair(&self, u: &[Sqrt3], v: &[Sqrt3]) -> Sqrt3 {
        let fv = self.form.mul_vec(v);
        u.iter().zip(&fv).fold(Sqrt3::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn node(&self, i: usize) -> &[Sqrt3] {
        &self.coords[i]
    }

    /// `Σ c_i e_i` in quotient coordinates.
    pub fn combine(&self, c: &[(usize, Sqrt3)]) -> Vec<Sqrt3> {
        let mut v = vec![Sqrt3::zero(); self.dim()];
        for (i, k) in c {
            v = linalg::vadd(&v, &linalg::vscale(k, &self.coords[*i]));
        }
        v
    }

    /// Signature of the principal Gram on `m`.
    pub fn subset_signature(&self, m: NodeSet) -> (usize, usize, usize) {
        linalg::sym_signature(&self.gram.principal(&indices(m)))
    }

    pub fn classify_subset(&self, m: NodeSet) -> SubsetClass {
        let d = &self.diagram;
        let mut kind = SubsetType::Elliptic;
        let mut rank = 0;
        let mut components = Vec::new();
        for c in d.components(m) {
            let sig = self.subset_signature(c);
            let t = type_of(sig);
            rank += sig.0 + sig.1;
            kind = kind.max(t);
            components.push((shape_name(d, c), t));
        }
        SubsetClass {
            mask: m,
            labels: d.labels_of(m),
            shape: shape_name(d, m),
            kind,
            components,
            rank,
        }
    }

    fn elliptic_memo(&self, m: NodeSet, memo: &mut HashMap<NodeSet, bool>) -> bool {
        if let Some(&e) = memo.get(&m) {
            return e;
        }
        let e = self.diagram.components(m).into_iter().all(|c| {
            if let Some(&e) = memo.get(&c) {
                return e;
            }
            let e = type_of(self.subset_signature(c)) == SubsetType::Elliptic;
            memo.insert(c, e);
            e
        });
        memo.insert(m, e);
        e
    }

    /// All minimal non-elliptic subsets, found by growing connected
    /// elliptic subsets one neighbor at a time. No size cap.
    pub fn critical_subsets(&self) -> Vec<SubsetClass> {
        let d = &self.diagram;
        let mut memo: HashMap<NodeSet, bool> = HashMap::new();
        let mut frontier: Vec<NodeSet> = Vec::new();
        let mut critical = Vec::new();
        for i in 0..d.len() {
            if self.elliptic_memo(bit(i), &mut memo) {
                frontier.push(bit(i));
            } else {
                critical.push(bit(i));
            }
        }
        let mut seen: std::collections::HashSet<NodeSet> = frontier.iter().copied().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in frontier {
                for v in indices(d.neighborhood(s) & !s) {
                    let t = s | bit(v);
                    if !seen.insert(t) {
                        continue;
                    }
                    if self.elliptic_memo(t, &mut memo) {
                        next.push(t);
                    } else if indices(t).into_iter().all(|u| self.elliptic_memo(t & !bit(u), &mut memo)) {
                        critical.push(t);
                    }
                }
            }
            frontier = next;
        }
        critical.sort_by_key(|&m| (m.count_ones(), self.diagram.labels_of(m)));
        critical.into_iter().map(|m| self.classify_subset(m)).collect()
    }

    /// Projection of `v` onto the orthogonal complement of `{e_j : j ∈ m}`.
    pub fn face_project(&self, m: NodeSet, v: &[Sqrt3]) -> Result<Vec<Sqrt3>, PolytopeError> {
        if !self.pair(v, v).is_negative() {
            return Err(PolytopeError::NotTimelike);
        }
        let idx = indices(m);
        if idx.is_empty() {
            return Ok(v.to_vec());
        }
        if self.classify_subset(m).kind != SubsetType::Elliptic {
            return Err(PolytopeError::NotElliptic(self.diagram.labels_of(m)));
        }
        let gj = self.gram.principal(&idx);
        let rhs: Vec<Sqrt3> = idx.iter().map(|&j| self.pair(v, &self.coords[j])).collect();
        let c = linalg::solve(&gj, &rhs).ok_or_else(|| PolytopeError::Degenerate("face Gram singular".into()))?;
        let shift = self.combine(&idx.iter().copied().zip(c).collect::<Vec<_>>());
        Ok(linalg::vsub(v, &shift))
    }

    /// `sinh²` of the distance from the point `w` to the mirror of `e_i`.
    pub fn sinh2(&self, w: &[Sqrt3], i: usize) -> Sqrt3 {
        let p = self.pair(w, &self.coords[i]);
        let ee = self.gram.get(i, i).clone();
        p.clone() * p / (ee * -self.pair(w, w))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalEntry {
    pub subset: SubsetClass,
    pub zperp: Vec<String>,
    #[serde(skip)]
    pub n_mask: NodeSet,
    pub n_shape: String,
    pub n_components: Vec<(String, SubsetType)>,
    pub n_rank: usize,
    pub passes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealVertex {
    pub nodes: Vec<String>,
    #[serde(skip)]
    pub mask: NodeSet,
    pub shape: String,
    /// Null ray in quotient coordinates, first nonzero coordinate 1.
    pub ray: Vec<String>,
    #[serde(skip)]
    pub ray_exact: Vec<Sqrt3>,
    pub orbit: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitSummary {
    pub orbit: usize,
    pub shape: String,
    pub size: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    #[serde(rename = "12-cell")]
    TwelveCell,
    #[serde(rename = "26-cell")]
    TwentySixCell,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylData {
    pub family: Family,
    pub w_p: Option<Vec<String>>,
    pub w_l: Option<Vec<String>>,
    /// Coordinates of `w₀`, absent when it needs a further square root.
    pub w0: Option<Vec<String>>,
    pub sinh2: Vec<String>,
    #[serde(skip)]
    pub w0_exact: Option<Vec<Sqrt3>>,
    #[serde(skip)]
    pub sinh2_exact: Option<Vec<Sqrt3>>,
    pub extension: Option<String>,
    pub equidistant: bool,
    pub invariant: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PolytopeCertificate {
    pub dimension: usize,
    pub signature: (usize, usize),
    pub critical: Vec<CriticalEntry>,
    pub verdict: bool,
    pub ideal_vertices: Vec<IdealVertex>,
    pub orbits: Vec<OrbitSummary>,
    pub weyl: Option<WeylData>,
}

impl PolytopeCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Vinberg's test: every critical subset is parabolic, and every component
/// of `N(J) = J ⊔ Z(J)` is parabolic with `rank G_N = dim − 2`.
pub fn vinberg_check(space: &RealQuadSpace) -> Result<PolytopeCertificate, PolytopeError> {
    if !space.is_lorentzian() {
        return Err(PolytopeError::NotLorentzian(space.signature.0, space.signature.1));
    }
    let d = &space.diagram;
    let target = space.dim() - 2;
    let mut by_n: HashMap<NodeSet, SubsetClass> = HashMap::new();
    let critical: Vec<CriticalEntry> = space
        .critical_subsets()
        .into_iter()
        .map(|j| {
            let z = d.zperp(j.mask);
            let nm = j.mask | z;
            let nc = by_n.entry(nm).or_insert_with(|| space.classify_subset(nm)).clone();
            let passes = j.kind == SubsetType::Parabolic
                && nc.components.iter().all(|(_, t)| *t == SubsetType::Parabolic)
                && nc.rank == target;
            CriticalEntry {
                subset: j,
                zperp: d.labels_of(z),
                n_mask: nm,
                n_shape: nc.shape,
                n_components: nc.components,
                n_rank: nc.rank,
                passes,
            }
        })
        .collect();
    let verdict = critical.iter().all(|c| c.passes);
    Ok(PolytopeCertificate {
        dimension: space.dim(),
        signature: space.signature,
        critical,
        verdict,
        ideal_vertices: Vec::new(),
        orbits: Vec::new(),
        weyl: None,
    })
}

fn normalize_ray(v: &[Sqrt3]) -> Vec<Sqrt3> {
    let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("nonzero ray");
    v.iter().map(|x| x.clone() / lead.clone()).collect()
}

/// Null ray of a connected parabolic component: its Perron kernel vector
/// mapped into the quotient. Errors unless the kernel is a single ray with
/// strictly positive coordinates.
fn perron_ray(space: &RealQuadSpace, c: NodeSet) -> Result<Vec<Sqrt3>, PolytopeError> {
    let idx = indices(c);
    let ker = linalg::kernel(&space.gram.principal(&idx));
    if ker.len() != 1 {
        return Err(PolytopeError::Degenerate(format!("component kernel of dimension {}", ker.len())));
    }
    let mut k = ker.into_iter().next().unwrap();
    if k[0].is_negative() {
        k = k.into_iter().map(|x| -x).collect();
    }
    if !k.iter().all(|x| x.sign() == Sign::Positive) {
        return Err(PolytopeError::Degenerate("kernel vector is not positive".into()));
    }
    Ok(space.combine(&idx.into_iter().zip(k).collect::<Vec<_>>()))
}

fn proportional(a: &[Sqrt3], b: &[Sqrt3]) -> bool {
    linalg::rank(&Mat::from_rows(vec![a.to_vec(), b.to_vec()])) == 1
}

/// Cusps of a finite-volume polytope, one per distinct `N(J)`, labelled by
/// orbit under all diagram automorphisms.
pub fn ideal_vertices(space: &RealQuadSpace, cert: &PolytopeCertificate) -> Result<(Vec<IdealVertex>, Vec<OrbitSummary>), PolytopeError> {
    if !cert.verdict {
        return Err(PolytopeError::CertificateFalse);
    }
    let d = &space.diagram;
    let mut masks: Vec<NodeSet> = cert.critical.iter().map(|c| c.n_mask).collect();
    masks.sort_by_key(|&m| d.labels_of(m));
    masks.dedup();
    let mut verts: Vec<IdealVertex> = Vec::new();
    for m in masks {
        let comps = d.components(m);
        let rays = comps.iter().map(|&c| perron_ray(space, c)).collect::<Result<Vec<_>, _>>()?;
        for r in &rays[1..] {
            if !proportional(&rays[0], r) {
                return Err(PolytopeError::Degenerate(format!("component rays of {:?} differ", d.labels_of(m))));
            }
        }
        if !space.pair(&rays[0], &rays[0]).is_zero() {
            return Err(PolytopeError::Degenerate("cusp ray is not null".into()));
        }
        let ray = normalize_ray(&rays[0]);
        if verts.iter().any(|v| v.ray_exact == ray) {
            continue;
        }
        verts.push(IdealVertex {
            nodes: d.labels_of(m),
            mask: m,
            shape: shape_name(d, m),
            ray: ray.iter().map(|x| x.to_string()).collect(),
            ray_exact: ray,
            orbit: usize::MAX,
        });
    }
    let index: HashMap<NodeSet, usize> = verts.iter().enumerate().map(|(i, v)| (v.mask, i)).collect();
    let auts = automorphisms(d, false);
    let mut orbits = Vec::new();
    for i in 0..verts.len() {
        if verts[i].orbit != usize::MAX {
            continue;
        }
        let o = orbits.len();
        let mut size = 0;
        for p in &auts {
            if let Some(&j) = index.get(&permute_mask(p, verts[i].mask)) {
                if verts[j].orbit == usize::MAX {
                    verts[j].orbit = o;
                    size += 1;
                }
            }
        }
        orbits.push(OrbitSummary {
            orbit: o,
            shape: verts[i].shape.clone(),
            size,
        });
    }
    Ok((verts, orbits))
}

fn strings(v: &[Sqrt3]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Solves `⟨w, e_p⟩ = 0` for every node of one color, normalised so that
/// `Σ_i ⟨w, e_i⟩ = 1`.
fn color_point(space: &RealQuadSpace, color: Color) -> Result<Vec<Sqrt3>, PolytopeError> {
    let colors = space.diagram.require_colors()?;
    let rows: Vec<Vec<Sqrt3>> = (0..space.diagram.len())
        .filter(|&i| colors[i] == color)
        .map(|i| space.form.mul_vec(&space.coords[i]))
        .collect();
    let ker = linalg::kernel(&Mat::from_rows(rows));
    if ker.len() != 1 {
        return Err(PolytopeError::Degenerate(format!("{color:?} perpendicular of dimension {}", ker.len())));
    }
    let k = &ker[0];
    let total = (0..space.diagram.len()).fold(Sqrt3::zero(), |acc, i| acc + space.pair(k, &space.coords[i]));
    if total.is_zero() {
        return Err(PolytopeError::Degenerate("normalisation vanishes".into()));
    }
    let w: Vec<Sqrt3> = k.iter().map(|x| x.clone() / total.clone()).collect();
    if (0..space.diagram.len()).any(|i| space.pair(&w, &space.coords[i]).is_negative()) {
        return Err(PolytopeError::Degenerate("pairings of mixed sign".into()));
    }
    Ok(w)
}

fn all_equal<T: PartialEq>(v: &[T]) -> bool {
    v.windows(2).all(|w| w[0] == w[1])
}

pub fn weyl_points(space: &RealQuadSpace, family: Family) -> Result<WeylData, PolytopeError> {
    let n = space.diagram.len();
    match family {
        Family::TwelveCell => {
            let w0 = space.combine(&(0..n).map(|i| (i, Sqrt3::one())).collect::<Vec<_>>());
            if !space.pair(&w0, &w0).is_negative() {
                return Err(PolytopeError::NotTimelike);
            }
            let s: Vec<Sqrt3> = (0..n).map(|i| space.sinh2(&w0, i)).collect();
            Ok(WeylData {
                family,
                w_p: None,
                w_l: None,
                w0: Some(strings(&w0)),
                sinh2: strings(&s),
                w0_exact: Some(w0),
                equidistant: all_equal(&s),
                invariant: s[0].to_string(),
                sinh2_exact: Some(s),
                extension: None,
            })
        }
        Family::TwentySixCell => {
            let wp = color_point(space, Color::Black)?;
            let wl = color_point(space, Color::White)?;
            let rp = -space.pair(&wp, &wp);
            let rl = -space.pair(&wl, &wl);
            if !rp.is_positive() || !rl.is_positive() {
                return Err(PolytopeError::NotTimelike);
            }
            if rp == rl {
                let w0 = linalg::vadd(&wp, &wl);
                let s: Vec<Sqrt3> = (0..n).map(|i| space.sinh2(&w0, i)).collect();
                return Ok(WeylData {
                    family,
                    w_p: Some(strings(&wp)),
                    w_l: Some(strings(&wl)),
                    w0: Some(strings(&w0)),
                    sinh2: strings(&s),
                    w0_exact: Some(w0),
                    equidistant: all_equal(&s),
                    invariant: s[0].to_string(),
                    sinh2_exact: Some(s),
                    extension: None,
                });
            }
            // w₀ ∝ w_P + c·w_L with c = sqrt(r_P r_L) / r_L
            let r = rp.clone() * rl.clone();
            let m = space.pair(&wp, &wl);
            let ww = Tower::new(Sqrt3::from(-2) * rp.clone(), Sqrt3::from(2) * m / rl.clone(), r.clone());
            let neg_ww = ww.scale(&Sqrt3::from(-1));
            let inv_den = Tower::new(neg_ww.u.clone(), -neg_ww.v.clone(), r.clone()).div_base(&(Sqrt3::from(3) * neg_ww.norm()));
            let s: Vec<Tower> = (0..n)
                .map(|i| {
                    let p = Tower::new(space.pair(&wp, &space.coords[i]), space.pair(&wl, &space.coords[i]) / rl.clone(), r.clone());
                    p.mul(&p).mul(&inv_den)
                })
                .collect();
            Ok(WeylData {
                family,
                w_p: Some(strings(&wp)),
                w_l: Some(strings(&wl)),
                w0: None,
                sinh2: s.iter().map(|x| x.to_string()).collect(),
                w0_exact: None,
                sinh2_exact: None,
                extension: Some(format!("sqrt({r})")),
                equidistant: all_equal(&s),
                invariant: s[0].to_string(),
            })
        }
    }
}

/// `sinh²` of the distance from `w` to its projection on the mirror of
/// `e_i`, via `cosh² = ⟨w,p⟩² / (⟨w,w⟩⟨p,p⟩)`.
pub fn facet_distance(space: &RealQuadSpace, w: &[Sqrt3], i: usize) -> Result<Sqrt3, PolytopeError> {
    let p = space.face_project(bit(i), w)?;
    let wp = space.pair(w, &p);
    Ok(wp.clone() * wp / (space.pair(w, w) * space.pair(&p, &p)) - Sqrt3::one())
}

/// The full certificate: Vinberg test, cusps with orbits, and Weyl data
/// for a named family.
pub fn certify(space: &RealQuadSpace, family: Option<Family>) -> Result<PolytopeCertificate, PolytopeError> {
    let mut cert = vinberg_check(space)?;
    if cert.verdict {
        let (v, o) = ideal_vertices(space, &cert)?;
        cert.ideal_vertices = v;
        cert.orbits = o;
    }
    if let Some(f) = family {
        cert.weyl = Some(weyl_points(space, f)?);
    }
    Ok(cert)
}

/// Shape counts of the critical subsets.
pub fn critical_shapes(cert: &PolytopeCertificate) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for c in &cert.critical {
        *m.entry(c.subset.shape.clone()).or_insert(0) += 1;
    }
    m
}
