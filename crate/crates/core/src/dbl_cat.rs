//! Finite double categories: objects, horizontal and vertical morphisms, and
//! squares, with both compositions materialized.

use crate::cat::{FinCat, ObjId};
use crate::error::{Error, Result};
use crate::report::Report;

pub type HmId = usize;
pub type VmId = usize;
pub type SqId = usize;

/// Boundary of a square.
///
/// `top: A -> A'` and `bottom: B -> B'` are horizontal, `left: A -> B` and
/// `right: A' -> B'` are vertical; corner consistency ties them together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Boundary {
    pub top: HmId,
    pub bottom: HmId,
    pub left: VmId,
    pub right: VmId,
}

/// A finite double category.
///
/// Composition conventions mirror [`crate::two_cat::Fin2Cat`]:
/// `hcomp_sq(b, a)` composes `a` first (shared vertical boundary
/// `right(a) = left(b)`), `vcomp_sq(b, a)` stacks `a` on top
/// (`bottom(a) = top(b)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDblCat {
    pub name: String,
    pub objects: Vec<String>,
    pub hm_names: Vec<String>,
    pub hm_src: Vec<ObjId>,
    pub hm_tgt: Vec<ObjId>,
    pub hm_id: Vec<HmId>,
    hm_comp: Vec<Option<HmId>>,
    pub vm_names: Vec<String>,
    pub vm_src: Vec<ObjId>,
    pub vm_tgt: Vec<ObjId>,
    pub vm_id: Vec<VmId>,
    vm_comp: Vec<Option<VmId>>,
    pub sq_names: Vec<String>,
    pub sq_top: Vec<HmId>,
    pub sq_bottom: Vec<HmId>,
    pub sq_left: Vec<VmId>,
    pub sq_right: Vec<VmId>,
    /// Horizontal identity square per vertical morphism.
    pub sq_hid: Vec<SqId>,
    /// Vertical identity square per horizontal morphism.
    pub sq_vid: Vec<SqId>,
    sq_hcomp: Vec<Option<SqId>>,
    sq_vcomp: Vec<Option<SqId>>,
}

impl FinDblCat {
    pub fn new(name: impl Into<String>) -> Self {
        FinDblCat {
            name: name.into(),
            objects: Vec::new(),
            hm_names: Vec::new(),
            hm_src: Vec::new(),
            hm_tgt: Vec::new(),
            hm_id: Vec::new(),
            hm_comp: Vec::new(),
            vm_names: Vec::new(),
            vm_src: Vec::new(),
            vm_tgt: Vec::new(),
            vm_id: Vec::new(),
            vm_comp: Vec::new(),
            sq_names: Vec::new(),
            sq_top: Vec::new(),
            sq_bottom: Vec::new(),
            sq_left: Vec::new(),
            sq_right: Vec::new(),
            sq_hid: Vec::new(),
            sq_vid: Vec::new(),
            sq_hcomp: Vec::new(),
            sq_vcomp: Vec::new(),
        }
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn n_hm(&self) -> usize {
        self.hm_names.len()
    }
    pub fn n_vm(&self) -> usize {
        self.vm_names.len()
    }
    pub fn n_sq(&self) -> usize {
        self.sq_names.len()
    }

    pub fn add_object(&mut self, name: impl Into<String>) -> ObjId {
        self.objects.push(name.into());
        self.hm_id.push(usize::MAX);
        self.vm_id.push(usize::MAX);
        self.objects.len() - 1
    }

    pub fn add_hm(&mut self, name: impl Into<String>, src: ObjId, tgt: ObjId) -> HmId {
        self.hm_names.push(name.into());
        self.hm_src.push(src);
        self.hm_tgt.push(tgt);
        self.sq_vid.push(usize::MAX);
        let n = self.n_hm();
        grow_table(&mut self.hm_comp, n);
        n - 1
    }

    pub fn add_vm(&mut self, name: impl Into<String>, src: ObjId, tgt: ObjId) -> VmId {
        self.vm_names.push(name.into());
        self.vm_src.push(src);
        self.vm_tgt.push(tgt);
        self.sq_hid.push(usize::MAX);
        let n = self.n_vm();
        grow_table(&mut self.vm_comp, n);
        n - 1
    }

    pub fn add_sq(&mut self, name: impl Into<String>, b: Boundary) -> SqId {
        self.sq_names.push(name.into());
        self.sq_top.push(b.top);
        self.sq_bottom.push(b.bottom);
        self.sq_left.push(b.left);
        self.sq_right.push(b.right);
        let n = self.n_sq();
        grow_table(&mut self.sq_hcomp, n);
        grow_table(&mut self.sq_vcomp, n);
        n - 1
    }

    pub fn set_hm_identity(&mut self, obj: ObjId, hm: HmId) {
        self.hm_id[obj] = hm;
    }
    pub fn set_vm_identity(&mut self, obj: ObjId, vm: VmId) {
        self.vm_id[obj] = vm;
    }
    pub fn set_sq_hid(&mut self, vm: VmId, sq: SqId) {
        self.sq_hid[vm] = sq;
    }
    pub fn set_sq_vid(&mut self, hm: HmId, sq: SqId) {
        self.sq_vid[hm] = sq;
    }
    pub fn set_hm_compose(&mut self, g: HmId, f: HmId, gf: HmId) {
        let n = self.n_hm();
        self.hm_comp[g * n + f] = Some(gf);
    }
    pub fn set_vm_compose(&mut self, g: VmId, f: VmId, gf: VmId) {
        let n = self.n_vm();
        self.vm_comp[g * n + f] = Some(gf);
    }
    pub fn set_sq_hcomp(&mut self, b: SqId, a: SqId, c: SqId) {
        let n = self.n_sq();
        self.sq_hcomp[b * n + a] = Some(c);
    }
    pub fn set_sq_vcomp(&mut self, b: SqId, a: SqId, c: SqId) {
        let n = self.n_sq();
        self.sq_vcomp[b * n + a] = Some(c);
    }

    pub fn hm_compose(&self, g: HmId, f: HmId) -> Option<HmId> {
        self.hm_comp[g * self.n_hm() + f]
    }
    pub fn vm_compose(&self, g: VmId, f: VmId) -> Option<VmId> {
        self.vm_comp[g * self.n_vm() + f]
    }
    pub fn sq_hcomp(&self, b: SqId, a: SqId) -> Option<SqId> {
        self.sq_hcomp[b * self.n_sq() + a]
    }
    pub fn sq_vcomp(&self, b: SqId, a: SqId) -> Option<SqId> {
        self.sq_vcomp[b * self.n_sq() + a]
    }

    pub fn boundary(&self, s: SqId) -> Boundary {
        Boundary {
            top: self.sq_top[s],
            bottom: self.sq_bottom[s],
            left: self.sq_left[s],
            right: self.sq_right[s],
        }
    }

    pub fn hm_composable(&self, g: HmId, f: HmId) -> bool {
        self.hm_tgt[f] == self.hm_src[g]
    }
    pub fn vm_composable(&self, g: VmId, f: VmId) -> bool {
        self.vm_tgt[f] == self.vm_src[g]
    }
    pub fn sq_hcomposable(&self, b: SqId, a: SqId) -> bool {
        self.sq_right[a] == self.sq_left[b]
            && self.hm_composable(self.sq_top[b], self.sq_top[a])
            && self.hm_composable(self.sq_bottom[b], self.sq_bottom[a])
    }
    pub fn sq_vcomposable(&self, b: SqId, a: SqId) -> bool {
        self.sq_bottom[a] == self.sq_top[b]
            && self.vm_composable(self.sq_left[b], self.sq_left[a])
            && self.vm_composable(self.sq_right[b], self.sq_right[a])
    }

    pub fn boundary_consistent(&self, b: Boundary) -> bool {
        self.hm_src[b.top] == self.vm_src[b.left]
            && self.hm_tgt[b.top] == self.vm_src[b.right]
            && self.hm_src[b.bottom] == self.vm_tgt[b.left]
            && self.hm_tgt[b.bottom] == self.vm_tgt[b.right]
    }

    pub fn hms_between(&self, a: ObjId, b: ObjId) -> Vec<HmId> {
        (0..self.n_hm()).filter(|&m| self.hm_src[m] == a && self.hm_tgt[m] == b).collect()
    }

    pub fn vms_between(&self, a: ObjId, b: ObjId) -> Vec<VmId> {
        (0..self.n_vm()).filter(|&m| self.vm_src[m] == a && self.vm_tgt[m] == b).collect()
    }

    /// Least vertical inverse of a square, if any: `t` with
    /// `vcomp(t, s) = vid(top(s))` and `vcomp(s, t) = vid(bottom(s))`.
    pub fn sq_vertical_inverse(&self, s: SqId) -> Option<SqId> {
        let (top, bottom) = (self.sq_top[s], self.sq_bottom[s]);
        (0..self.n_sq()).find(|&t| {
            self.sq_top[t] == bottom
                && self.sq_bottom[t] == top
                && self.sq_vcomp(t, s) == Some(self.sq_vid[top])
                && self.sq_vcomp(s, t) == Some(self.sq_vid[bottom])
        })
    }

    pub fn sq_vertically_invertible(&self, s: SqId) -> bool {
        self.sq_vertical_inverse(s).is_some()
    }

    pub fn hm_label(&self, m: HmId) -> String {
        self.hm_names.get(m).cloned().unwrap_or_else(|| format!("#{m}"))
    }
    pub fn vm_label(&self, m: VmId) -> String {
        self.vm_names.get(m).cloned().unwrap_or_else(|| format!("#{m}"))
    }
    pub fn sq_label(&self, s: SqId) -> String {
        self.sq_names.get(s).cloned().unwrap_or_else(|| format!("#{s}"))
    }

    /// The horizontal 1-category (objects and horizontal morphisms).
    pub fn horizontal_cat(&self) -> FinCat {
        let mut c = FinCat::new(format!("{}_h", self.name));
        c.objects = self.objects.clone();
        c.mor_names = self.hm_names.clone();
        c.src = self.hm_src.clone();
        c.tgt = self.hm_tgt.clone();
        c.identity = self.hm_id.clone();
        c.alloc_compose_table();
        for g in 0..self.n_hm() {
            for f in 0..self.n_hm() {
                if let Some(h) = self.hm_compose(g, f) {
                    c.set_compose(g, f, h);
                }
            }
        }
        c
    }

    /// The vertical 1-category (objects and vertical morphisms).
    pub fn vertical_cat(&self) -> FinCat {
        let mut c = FinCat::new(format!("{}_v", self.name));
        c.objects = self.objects.clone();
        c.mor_names = self.vm_names.clone();
        c.src = self.vm_src.clone();
        c.tgt = self.vm_tgt.clone();
        c.identity = self.vm_id.clone();
        c.alloc_compose_table();
        for g in 0..self.n_vm() {
            for f in 0..self.n_vm() {
                if let Some(h) = self.vm_compose(g, f) {
                    c.set_compose(g, f, h);
                }
            }
        }
        c
    }

    pub fn tables_eq(&self, other: &FinDblCat) -> bool {
        self.n_objects() == other.n_objects()
            && self.hm_src == other.hm_src
            && self.hm_tgt == other.hm_tgt
            && self.hm_id == other.hm_id
            && self.hm_comp == other.hm_comp
            && self.vm_src == other.vm_src
            && self.vm_tgt == other.vm_tgt
            && self.vm_id == other.vm_id
            && self.vm_comp == other.vm_comp
            && self.sq_top == other.sq_top
            && self.sq_bottom == other.sq_bottom
            && self.sq_left == other.sq_left
            && self.sq_right == other.sq_right
            && self.sq_hid == other.sq_hid
            && self.sq_vid == other.sq_vid
            && self.sq_hcomp == other.sq_hcomp
            && self.sq_vcomp == other.sq_vcomp
    }

    fn well_formed(&self) -> Result<()> {
        let bad = |detail: String| Error::MalformedTable { structure: self.name.clone(), detail };
        let (no, nh, nv, ns) = (self.n_objects(), self.n_hm(), self.n_vm(), self.n_sq());
        if self.hm_src.iter().chain(&self.hm_tgt).any(|&o| o >= no)
            || self.vm_src.iter().chain(&self.vm_tgt).any(|&o| o >= no)
        {
            return Err(bad("morphism endpoint out of range".into()));
        }
        if self.hm_id.iter().any(|&m| m >= nh) || self.vm_id.iter().any(|&m| m >= nv) {
            return Err(bad("identity morphism out of range".into()));
        }
        if self.sq_top.iter().chain(&self.sq_bottom).any(|&m| m >= nh)
            || self.sq_left.iter().chain(&self.sq_right).any(|&m| m >= nv)
        {
            return Err(bad("square boundary out of range".into()));
        }
        if self.sq_hid.iter().any(|&s| s >= ns) || self.sq_vid.iter().any(|&s| s >= ns) {
            return Err(bad("identity square out of range".into()));
        }
        if self.hm_comp.len() != nh * nh
            || self.vm_comp.len() != nv * nv
            || self.sq_hcomp.len() != ns * ns
            || self.sq_vcomp.len() != ns * ns
        {
            return Err(bad("composition table has wrong size".into()));
        }
        if self.hm_comp.iter().flatten().any(|&h| h >= nh)
            || self.vm_comp.iter().flatten().any(|&h| h >= nv)
            || self.sq_hcomp.iter().flatten().any(|&h| h >= ns)
            || self.sq_vcomp.iter().flatten().any(|&h| h >= ns)
        {
            return Err(bad("composite references unknown id".into()));
        }
        Ok(())
    }
}

fn grow_table(table: &mut Vec<Option<usize>>, n: usize) {
    let mut new = vec![None; n * n];
    for g in 0..n - 1 {
        for f in 0..n - 1 {
            new[g * n + f] = table[g * (n - 1) + f];
        }
    }
    *table = new;
}

/// All squares of `d` with exactly the given boundary, in id order.
///
/// Errors if the boundary is not corner-consistent; a consistent but
/// unfillable boundary yields the empty set.
pub fn squares_filling(d: &FinDblCat, b: Boundary) -> Result<Vec<SqId>> {
    if b.top >= d.n_hm() || b.bottom >= d.n_hm() {
        return Err(Error::UnknownId { sort: "hmor", id: b.top.max(b.bottom), size: d.n_hm() });
    }
    if b.left >= d.n_vm() || b.right >= d.n_vm() {
        return Err(Error::UnknownId { sort: "vmor", id: b.left.max(b.right), size: d.n_vm() });
    }
    if !d.boundary_consistent(b) {
        return Err(Error::InconsistentBoundary(format!(
            "top {} bottom {} left {} right {}",
            d.hm_label(b.top),
            d.hm_label(b.bottom),
            d.vm_label(b.left),
            d.vm_label(b.right),
        )));
    }
    Ok((0..d.n_sq()).filter(|&s| d.boundary(s) == b).collect())
}

/// Exhaustively check all double-category axioms, including interchange on
/// every composable 2x2 grid of squares.
pub fn validate_fin_dblcat(d: &FinDblCat) -> Result<Report> {
    d.well_formed()?;
    let mut report = Report::new();
    report.absorb("horizontal", crate::cat::validate_fin_cat(&d.horizontal_cat())?);
    report.absorb("vertical", crate::cat::validate_fin_cat(&d.vertical_cat())?);
    let ns = d.n_sq();

    for s in 0..ns {
        if !d.boundary_consistent(d.boundary(s)) {
            report.violate("square corner consistency", vec![d.sq_label(s)]);
        }
    }

    // Identity squares have the right boundaries.
    for u in 0..d.n_vm() {
        let s = d.sq_hid[u];
        let want = Boundary {
            top: d.hm_id[d.vm_src[u]],
            bottom: d.hm_id[d.vm_tgt[u]],
            left: u,
            right: u,
        };
        if d.boundary(s) != want {
            report.violate("identity square boundary", vec![d.vm_label(u), d.sq_label(s)]);
        }
    }
    for a in 0..d.n_hm() {
        let s = d.sq_vid[a];
        let want = Boundary {
            top: a,
            bottom: a,
            left: d.vm_id[d.hm_src[a]],
            right: d.vm_id[d.hm_tgt[a]],
        };
        if d.boundary(s) != want {
            report.violate("identity square boundary", vec![d.hm_label(a), d.sq_label(s)]);
        }
    }

    // The double identity square: hid(vid_A) = vid(id_A).
    for o in 0..d.n_objects() {
        if d.sq_hid[d.vm_id[o]] != d.sq_vid[d.hm_id[o]] {
            report.violate("double identity square", vec![d.objects[o].clone()]);
        }
    }

    // Square compositions: totality, boundaries, units, associativity.
    for b in 0..ns {
        for a in 0..ns {
            match (d.sq_hcomposable(b, a), d.sq_hcomp(b, a)) {
                (true, None) => report.violate("hcompose_sq total", vec![d.sq_label(b), d.sq_label(a)]),
                (false, Some(_)) => {
                    report.violate("hcompose_sq on non-composable", vec![d.sq_label(b), d.sq_label(a)])
                }
                (true, Some(c)) => {
                    let want = Boundary {
                        top: d.hm_compose(d.sq_top[b], d.sq_top[a]).unwrap(),
                        bottom: d.hm_compose(d.sq_bottom[b], d.sq_bottom[a]).unwrap(),
                        left: d.sq_left[a],
                        right: d.sq_right[b],
                    };
                    if d.boundary(c) != want {
                        report.violate("hcompose_sq boundary", vec![d.sq_label(b), d.sq_label(a)]);
                    }
                }
                _ => {}
            }
            match (d.sq_vcomposable(b, a), d.sq_vcomp(b, a)) {
                (true, None) => report.violate("vcompose_sq total", vec![d.sq_label(b), d.sq_label(a)]),
                (false, Some(_)) => {
                    report.violate("vcompose_sq on non-composable", vec![d.sq_label(b), d.sq_label(a)])
                }
                (true, Some(c)) => {
                    let want = Boundary {
                        top: d.sq_top[a],
                        bottom: d.sq_bottom[b],
                        left: d.vm_compose(d.sq_left[b], d.sq_left[a]).unwrap(),
                        right: d.vm_compose(d.sq_right[b], d.sq_right[a]).unwrap(),
                    };
                    if d.boundary(c) != want {
                        report.violate("vcompose_sq boundary", vec![d.sq_label(b), d.sq_label(a)]);
                    }
                }
                _ => {}
            }
        }
    }
    for s in 0..ns {
        if d.sq_hcomp(s, d.sq_hid[d.sq_left[s]]) != Some(s)
            || d.sq_hcomp(d.sq_hid[d.sq_right[s]], s) != Some(s)
        {
            report.violate("hcompose_sq unit", vec![d.sq_label(s)]);
        }
        if d.sq_vcomp(s, d.sq_vid[d.sq_top[s]]) != Some(s)
            || d.sq_vcomp(d.sq_vid[d.sq_bottom[s]], s) != Some(s)
        {
            report.violate("vcompose_sq unit", vec![d.sq_label(s)]);
        }
    }
    for x in 0..ns {
        for y in 0..ns {
            let hc = d.sq_hcomposable(x, y);
            let vc = d.sq_vcomposable(x, y);
            if !hc && !vc {
                continue;
            }
            for z in 0..ns {
                if hc && d.sq_hcomposable(y, z) {
                    let l = d.sq_hcomp(x, y).and_then(|xy| d.sq_hcomp(xy, z));
                    let r = d.sq_hcomp(y, z).and_then(|yz| d.sq_hcomp(x, yz));
                    if l != r || l.is_none() {
                        report.violate(
                            "hcompose_sq associativity",
                            vec![d.sq_label(x), d.sq_label(y), d.sq_label(z)],
                        );
                    }
                }
                if vc && d.sq_vcomposable(y, z) {
                    let l = d.sq_vcomp(x, y).and_then(|xy| d.sq_vcomp(xy, z));
                    let r = d.sq_vcomp(y, z).and_then(|yz| d.sq_vcomp(x, yz));
                    if l != r || l.is_none() {
                        report.violate(
                            "vcompose_sq associativity",
                            vec![d.sq_label(x), d.sq_label(y), d.sq_label(z)],
                        );
                    }
                }
            }
        }
    }

    // Functoriality of identity assignments.
    for g in 0..d.n_hm() {
        for f in 0..d.n_hm() {
            if let Some(gf) = d.hm_compose(g, f) {
                if d.sq_hcomp(d.sq_vid[g], d.sq_vid[f]) != Some(d.sq_vid[gf]) {
                    report.violate("vid square functoriality", vec![d.hm_label(g), d.hm_label(f)]);
                }
            }
        }
    }
    for g in 0..d.n_vm() {
        for f in 0..d.n_vm() {
            if let Some(gf) = d.vm_compose(g, f) {
                if d.sq_vcomp(d.sq_hid[g], d.sq_hid[f]) != Some(d.sq_hid[gf]) {
                    report.violate("hid square functoriality", vec![d.vm_label(g), d.vm_label(f)]);
                }
            }
        }
    }

    // Interchange on every 2x2 composable grid:
    //   [ a | b ]         compose rows then columns
    //   [ c | e ]     vs  compose columns then rows.
    for a in 0..ns {
        for b in 0..ns {
            if !d.sq_hcomposable(b, a) {
                continue;
            }
            for c in 0..ns {
                if !d.sq_vcomposable(c, a) {
                    continue;
                }
                for e in 0..ns {
                    if !d.sq_vcomposable(e, b) || !d.sq_hcomposable(e, c) {
                        continue;
                    }
                    let rows = d
                        .sq_hcomp(b, a)
                        .zip(d.sq_hcomp(e, c))
                        .and_then(|(t, bm)| d.sq_vcomp(bm, t));
                    let cols = d
                        .sq_vcomp(c, a)
                        .zip(d.sq_vcomp(e, b))
                        .and_then(|(l, r)| d.sq_hcomp(r, l));
                    if rows != cols || rows.is_none() {
                        report.violate(
                            "interchange",
                            vec![d.sq_label(a), d.sq_label(b), d.sq_label(c), d.sq_label(e)],
                        );
                    }
                }
            }
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::hh_embed;
    use crate::fixtures;

    #[test]
    fn fixture_doubles_validate() {
        for d in [
            fixtures::varr(),
            fixtures::sq_dbl(),
            fixtures::free_vh(),
            hh_embed(&fixtures::arr()),
            hh_embed(&fixtures::term_2cat()),
        ] {
            let report = validate_fin_dblcat(&d).unwrap();
            assert!(report.ok(), "{}: {report}", d.name);
        }
    }

    #[test]
    fn varr_shape() {
        let v = fixtures::varr();
        assert_eq!(v.n_objects(), 2);
        assert_eq!(v.n_hm(), 2);
        assert_eq!(v.n_vm(), 3);
        assert_eq!(v.n_sq(), 3);
    }

    #[test]
    fn corrupted_identity_square_boundary() {
        let mut v = fixtures::varr();
        let u = fixtures::VARR_U;
        // Point the horizontal identity square of u at the double identity on 0.
        v.set_sq_hid(u, v.sq_vid[v.hm_id[0]]);
        let report = validate_fin_dblcat(&v).unwrap();
        assert!(!report.ok());
        assert!(report.violations.iter().any(|x| x.axiom == "identity square boundary"));
    }

    #[test]
    fn squares_filling_varr() {
        let v = fixtures::varr();
        let u = fixtures::VARR_U;
        let found = squares_filling(
            &v,
            Boundary { top: v.hm_id[0], bottom: v.hm_id[1], left: u, right: u },
        )
        .unwrap();
        assert_eq!(found, vec![v.sq_hid[u]]);
        // Corner-inconsistent boundary is rejected before search.
        let bad = squares_filling(
            &v,
            Boundary { top: v.hm_id[0], bottom: v.hm_id[0], left: u, right: v.vm_id[0] },
        );
        assert!(matches!(bad, Err(Error::InconsistentBoundary(_))));
    }

    #[test]
    fn squares_filling_partitions_squares() {
        // Every square appears for exactly its own boundary.
        for d in [fixtures::varr(), fixtures::sq_dbl(), hh_embed(&fixtures::cell())] {
            let mut seen = vec![0usize; d.n_sq()];
            for top in 0..d.n_hm() {
                for bottom in 0..d.n_hm() {
                    for left in 0..d.n_vm() {
                        for right in 0..d.n_vm() {
                            let b = Boundary { top, bottom, left, right };
                            if !d.boundary_consistent(b) {
                                continue;
                            }
                            for s in squares_filling(&d, b).unwrap() {
                                seen[s] += 1;
                            }
                        }
                    }
                }
            }
            assert!(seen.iter().all(|&n| n == 1), "{}", d.name);
        }
    }
}
