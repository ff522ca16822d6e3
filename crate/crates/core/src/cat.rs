//! Finite categories with explicit composition tables, and functors between them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::report::Report;

pub type ObjId = usize;
pub type MorId = usize;

/// A finite category: id-indexed objects and morphisms, identity assignment,
/// and a dense partial composition table.
///
/// `compose(g, f)` is `g . f` (apply `f` first), defined exactly when
/// `tgt(f) = src(g)`. Cells are equal iff their ids are equal; nothing is
/// quotiented. All iteration is in id order, so every "first found" answer is
/// canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    pub name: String,
    pub objects: Vec<String>,
    pub mor_names: Vec<String>,
    pub src: Vec<ObjId>,
    pub tgt: Vec<ObjId>,
    pub identity: Vec<MorId>,
    /// Row-major `[g * n_mor + f]`.
    compose: Vec<Option<MorId>>,
}

impl FinCat {
    pub fn new(name: impl Into<String>) -> Self {
        FinCat {
            name: name.into(),
            objects: Vec::new(),
            mor_names: Vec::new(),
            src: Vec::new(),
            tgt: Vec::new(),
            identity: Vec::new(),
            compose: Vec::new(),
        }
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_mor(&self) -> usize {
        self.mor_names.len()
    }

    pub fn add_object(&mut self, name: impl Into<String>) -> ObjId {
        self.objects.push(name.into());
        self.identity.push(usize::MAX);
        self.objects.len() - 1
    }

    pub fn add_mor(&mut self, name: impl Into<String>, src: ObjId, tgt: ObjId) -> MorId {
        self.mor_names.push(name.into());
        self.src.push(src);
        self.tgt.push(tgt);
        let n = self.n_mor();
        let mut table = vec![None; n * n];
        for g in 0..n - 1 {
            for f in 0..n - 1 {
                table[g * n + f] = self.compose[g * (n - 1) + f];
            }
        }
        self.compose = table;
        n - 1
    }

    pub fn set_identity(&mut self, obj: ObjId, mor: MorId) {
        self.identity[obj] = mor;
    }

    pub fn set_compose(&mut self, g: MorId, f: MorId, gf: MorId) {
        let n = self.n_mor();
        self.compose[g * n + f] = Some(gf);
    }

    /// Reset the composition table after assigning the sort fields directly.
    pub fn alloc_compose_table(&mut self) {
        let n = self.n_mor();
        self.compose = vec![None; n * n];
    }

    /// `g . f`, if defined.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.compose[g * self.n_mor() + f]
    }

    pub fn composable(&self, g: MorId, f: MorId) -> bool {
        self.tgt[f] == self.src[g]
    }

    /// Morphisms from `a` to `b` in id order.
    pub fn hom(&self, a: ObjId, b: ObjId) -> Vec<MorId> {
        (0..self.n_mor()).filter(|&m| self.src[m] == a && self.tgt[m] == b).collect()
    }

    /// Is `m` invertible? Returns its least inverse if so.
    pub fn inverse(&self, m: MorId) -> Option<MorId> {
        let (a, b) = (self.src[m], self.tgt[m]);
        (0..self.n_mor()).find(|&w| {
            self.src[w] == b
                && self.tgt[w] == a
                && self.compose(w, m) == Some(self.identity[a])
                && self.compose(m, w) == Some(self.identity[b])
        })
    }

    pub fn is_iso(&self, m: MorId) -> bool {
        self.inverse(m).is_some()
    }

    fn well_formed(&self) -> Result<()> {
        let (no, nm) = (self.n_objects(), self.n_mor());
        for (m, (&s, &t)) in self.src.iter().zip(&self.tgt).enumerate() {
            if s >= no || t >= no {
                return Err(Error::MalformedTable {
                    structure: self.name.clone(),
                    detail: format!("morphism {m} has out-of-range endpoint"),
                });
            }
        }
        for (o, &i) in self.identity.iter().enumerate() {
            if i >= nm {
                return Err(Error::MalformedTable {
                    structure: self.name.clone(),
                    detail: format!("identity of object {o} is out of range"),
                });
            }
        }
        if self.compose.len() != nm * nm {
            return Err(Error::MalformedTable {
                structure: self.name.clone(),
                detail: "composition table has wrong size".into(),
            });
        }
        if let Some(h) = self.compose.iter().flatten().find(|&&h| h >= nm) {
            return Err(Error::MalformedTable {
                structure: self.name.clone(),
                detail: format!("composite references unknown morphism {h}"),
            });
        }
        Ok(())
    }

    /// Structural equality on the id tables, ignoring names.
    ///
    /// Derived ids are deterministic functions of input ids, so the functor
    /// identities of the theory hold as literal table equality under this
    /// comparison.
    pub fn tables_eq(&self, other: &FinCat) -> bool {
        self.n_objects() == other.n_objects()
            && self.src == other.src
            && self.tgt == other.tgt
            && self.identity == other.identity
            && self.compose == other.compose
    }

    pub fn mor_label(&self, m: MorId) -> String {
        self.mor_names.get(m).cloned().unwrap_or_else(|| format!("#{m}"))
    }
}

/// Exhaustively check the category axioms.
///
/// Returns `Err` only when the tables are structurally malformed; axiom
/// failures are reported as violations.
pub fn validate_fin_cat(c: &FinCat) -> Result<Report> {
    c.well_formed()?;
    let mut report = Report::new();
    let nm = c.n_mor();

    for o in 0..c.n_objects() {
        let i = c.identity[o];
        if c.src[i] != o || c.tgt[i] != o {
            report.violate("identity endpoint", vec![c.objects[o].clone(), c.mor_label(i)]);
        }
    }

    for g in 0..nm {
        for f in 0..nm {
            match (c.composable(g, f), c.compose(g, f)) {
                (true, None) => {
                    report.violate("compose total", vec![c.mor_label(g), c.mor_label(f)]);
                }
                (false, Some(_)) => {
                    report.violate("compose on non-composable", vec![c.mor_label(g), c.mor_label(f)]);
                }
                (true, Some(h)) => {
                    if c.src[h] != c.src[f] || c.tgt[h] != c.tgt[g] {
                        report.violate("composite boundary", vec![c.mor_label(g), c.mor_label(f)]);
                    }
                }
                (false, None) => {}
            }
        }
    }

    for f in 0..nm {
        let (a, b) = (c.src[f], c.tgt[f]);
        if c.compose(f, c.identity[a]) != Some(f) || c.compose(c.identity[b], f) != Some(f) {
            report.violate("unit law", vec![c.mor_label(f)]);
        }
    }

    for h in 0..nm {
        for g in 0..nm {
            if !c.composable(h, g) {
                continue;
            }
            for f in 0..nm {
                if !c.composable(g, f) {
                    continue;
                }
                let left = c.compose(h, g).and_then(|hg| c.compose(hg, f));
                let right = c.compose(g, f).and_then(|gf| c.compose(h, gf));
                if left != right || left.is_none() {
                    report.violate(
                        "associativity",
                        vec![c.mor_label(h), c.mor_label(g), c.mor_label(f)],
                    );
                }
            }
        }
    }

    Ok(report)
}

/// A functor between finite categories, as explicit maps on both sorts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatFunctor {
    pub src: Arc<FinCat>,
    pub tgt: Arc<FinCat>,
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
}

impl CatFunctor {
    pub fn identity(c: Arc<FinCat>) -> Self {
        CatFunctor {
            obj_map: (0..c.n_objects()).collect(),
            mor_map: (0..c.n_mor()).collect(),
            src: c.clone(),
            tgt: c,
        }
    }

    /// `g . f` (apply `f` first).
    pub fn compose(g: &CatFunctor, f: &CatFunctor) -> CatFunctor {
        CatFunctor {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            obj_map: f.obj_map.iter().map(|&o| g.obj_map[o]).collect(),
            mor_map: f.mor_map.iter().map(|&m| g.mor_map[m]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.obj_map.iter().enumerate().all(|(i, &o)| i == o)
            && self.mor_map.iter().enumerate().all(|(i, &m)| i == m)
    }

    /// Same maps, ignoring which `Arc`s the endpoints live behind.
    pub fn same_maps(&self, other: &CatFunctor) -> bool {
        self.obj_map == other.obj_map && self.mor_map == other.mor_map
    }
}

pub fn validate_cat_functor(f: &CatFunctor) -> Result<Report> {
    let (x, y) = (&f.src, &f.tgt);
    if f.obj_map.len() != x.n_objects() || f.mor_map.len() != x.n_mor() {
        return Err(Error::SortMismatch("functor table sizes".into()));
    }
    if f.obj_map.iter().any(|&o| o >= y.n_objects()) || f.mor_map.iter().any(|&m| m >= y.n_mor()) {
        return Err(Error::UnknownId { sort: "functor image", id: 0, size: 0 });
    }
    let mut report = Report::new();
    for m in 0..x.n_mor() {
        let fm = f.mor_map[m];
        if y.src[fm] != f.obj_map[x.src[m]] || y.tgt[fm] != f.obj_map[x.tgt[m]] {
            report.violate("functor boundary", vec![x.mor_label(m)]);
        }
    }
    for o in 0..x.n_objects() {
        if f.mor_map[x.identity[o]] != y.identity[f.obj_map[o]] {
            report.violate("functor identity", vec![x.objects[o].clone()]);
        }
    }
    for g in 0..x.n_mor() {
        for m in 0..x.n_mor() {
            if let Some(gm) = x.compose(g, m) {
                if y.compose(f.mor_map[g], f.mor_map[m]) != Some(f.mor_map[gm]) {
                    report.violate("functor law", vec![x.mor_label(g), x.mor_label(m)]);
                }
            }
        }
    }
    Ok(report)
}

/// The arrow category of `k`: objects are the morphisms of `k`, morphisms are
/// the commutative squares, composition is componentwise.
pub fn arrow_cat(k: &FinCat) -> (FinCat, Vec<(MorId, MorId)>) {
    let mut ar = FinCat::new(format!("ar({})", k.name));
    for m in 0..k.n_mor() {
        ar.add_object(k.mor_label(m));
    }
    let mut decode = Vec::new();
    for f in 0..k.n_mor() {
        for f2 in 0..k.n_mor() {
            for s0 in k.hom(k.src[f], k.src[f2]) {
                for s1 in k.hom(k.tgt[f], k.tgt[f2]) {
                    if k.compose(f2, s0) == k.compose(s1, f) {
                        let id = ar.add_mor(
                            format!("({},{})", k.mor_label(s0), k.mor_label(s1)),
                            f,
                            f2,
                        );
                        decode.push((s0, s1));
                        debug_assert_eq!(id, decode.len() - 1);
                    }
                }
            }
        }
    }
    let src = ar.src.clone();
    let tgt = ar.tgt.clone();
    let index = |s0: MorId, s1: MorId, f: MorId, f2: MorId| -> MorId {
        (0..decode.len())
            .find(|&i| decode[i] == (s0, s1) && src[i] == f && tgt[i] == f2)
            .expect("arrow category is closed under composition")
    };
    for f in 0..k.n_mor() {
        ar.set_identity(f, index(k.identity[k.src[f]], k.identity[k.tgt[f]], f, f));
    }
    for g in 0..decode.len() {
        for f in 0..decode.len() {
            if tgt[f] != src[g] {
                continue;
            }
            let (a0, a1) = decode[f];
            let (b0, b1) = decode[g];
            let c0 = k.compose(b0, a0).expect("square legs compose");
            let c1 = k.compose(b1, a1).expect("square legs compose");
            ar.set_compose(g, f, index(c0, c1, src[f], tgt[g]));
        }
    }
    (ar, decode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn term_and_iso_validate() {
        assert!(validate_fin_cat(&fixtures::term_cat()).unwrap().ok());
        assert!(validate_fin_cat(&fixtures::iso_cat()).unwrap().ok());
        assert!(validate_fin_cat(&fixtures::two_cat_cat()).unwrap().ok());
    }

    #[test]
    fn corrupted_iso_fails_unit_law() {
        let mut iso = fixtures::iso_cat();
        // Redirect g . f to the identity at the wrong object.
        let f = 2;
        let g = 3;
        iso.set_compose(g, f, iso.identity[1]);
        let report = validate_fin_cat(&iso).unwrap();
        assert!(!report.ok());
        assert!(report.violations.iter().any(|v| v.axiom.contains("composite boundary")
            || v.axiom.contains("associativity")
            || v.axiom.contains("unit law")));
    }

    #[test]
    fn compose_out_of_range_is_malformed() {
        let mut c = fixtures::term_cat();
        c.set_compose(0, 0, 7);
        assert!(matches!(validate_fin_cat(&c), Err(Error::MalformedTable { .. })));
    }

    #[test]
    fn iso_inverses() {
        let iso = fixtures::iso_cat();
        assert_eq!(iso.inverse(2), Some(3));
        assert_eq!(iso.inverse(3), Some(2));
        let two = fixtures::two_cat_cat();
        assert_eq!(two.inverse(2), None);
    }

    #[test]
    fn arrow_cat_of_walking_arrow() {
        // ar(2) has 3 objects (id_a, id_b, m) and commutative squares between them.
        let (ar, _) = arrow_cat(&fixtures::two_cat_cat());
        assert_eq!(ar.n_objects(), 3);
        assert!(validate_fin_cat(&ar).unwrap().ok());
        // Independent count: squares (s0, s1) with f2.s0 = s1.f.
        let k = fixtures::two_cat_cat();
        let mut expected = 0;
        for f in 0..k.n_mor() {
            for f2 in 0..k.n_mor() {
                for s0 in k.hom(k.src[f], k.src[f2]) {
                    for s1 in k.hom(k.tgt[f], k.tgt[f2]) {
                        if k.compose(f2, s0) == k.compose(s1, f) {
                            expected += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(ar.n_mor(), expected);
    }
}
