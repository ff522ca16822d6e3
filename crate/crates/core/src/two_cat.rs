//! Finite 2-categories: a category enriched in categories, fully materialized.

use std::sync::Arc;

use crate::cat::{FinCat, MorId, ObjId};
use crate::error::{Error, Result};
use crate::report::Report;

pub type CellId = usize;

/// A finite 2-category.
///
/// The 1-dimensional level is a [`FinCat`]-shaped table; 2-cells carry their
/// boundary morphisms (which must be parallel) and compose vertically along a
/// shared morphism and horizontally along a shared object.
///
/// Conventions, used everywhere in this crate:
/// - `compose_mor(g, f)` is `g . f` (apply `f` first);
/// - `vcomp(b, a)` is `b * a`, defined when `cell_tgt(a) = cell_src(b)`;
/// - `hcomp(b, a)` composes `a: f => f': A -> B` first, then
///   `b: g => g': B -> C`, yielding `g.f => g'.f'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fin2Cat {
    pub name: String,
    pub objects: Vec<String>,
    pub mor_names: Vec<String>,
    pub mor_src: Vec<ObjId>,
    pub mor_tgt: Vec<ObjId>,
    pub mor_id: Vec<MorId>,
    mor_comp: Vec<Option<MorId>>,
    pub cell_names: Vec<String>,
    pub cell_src: Vec<MorId>,
    pub cell_tgt: Vec<MorId>,
    pub cell_id: Vec<CellId>,
    vcomp: Vec<Option<CellId>>,
    hcomp: Vec<Option<CellId>>,
}

impl Fin2Cat {
    pub fn new(name: impl Into<String>) -> Self {
        Fin2Cat {
            name: name.into(),
            objects: Vec::new(),
            mor_names: Vec::new(),
            mor_src: Vec::new(),
            mor_tgt: Vec::new(),
            mor_id: Vec::new(),
            mor_comp: Vec::new(),
            cell_names: Vec::new(),
            cell_src: Vec::new(),
            cell_tgt: Vec::new(),
            cell_id: Vec::new(),
            vcomp: Vec::new(),
            hcomp: Vec::new(),
        }
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_mor(&self) -> usize {
        self.mor_names.len()
    }

    pub fn n_cells(&self) -> usize {
        self.cell_names.len()
    }

    pub fn add_object(&mut self, name: impl Into<String>) -> ObjId {
        self.objects.push(name.into());
        self.mor_id.push(usize::MAX);
        self.objects.len() - 1
    }

    pub fn add_mor(&mut self, name: impl Into<String>, src: ObjId, tgt: ObjId) -> MorId {
        self.mor_names.push(name.into());
        self.mor_src.push(src);
        self.mor_tgt.push(tgt);
        self.cell_id.push(usize::MAX);
        let n = self.n_mor();
        let mut table = vec![None; n * n];
        for g in 0..n - 1 {
            for f in 0..n - 1 {
                table[g * n + f] = self.mor_comp[g * (n - 1) + f];
            }
        }
        self.mor_comp = table;
        n - 1
    }

    pub fn add_cell(&mut self, name: impl Into<String>, src: MorId, tgt: MorId) -> CellId {
        self.cell_names.push(name.into());
        self.cell_src.push(src);
        self.cell_tgt.push(tgt);
        let n = self.n_cells();
        let grow = |table: &mut Vec<Option<CellId>>| {
            let mut new = vec![None; n * n];
            for g in 0..n - 1 {
                for f in 0..n - 1 {
                    new[g * n + f] = table[g * (n - 1) + f];
                }
            }
            *table = new;
        };
        grow(&mut self.vcomp);
        grow(&mut self.hcomp);
        n - 1
    }

    pub fn set_mor_identity(&mut self, obj: ObjId, mor: MorId) {
        self.mor_id[obj] = mor;
    }

    pub fn set_cell_identity(&mut self, mor: MorId, cell: CellId) {
        self.cell_id[mor] = cell;
    }

    pub fn set_mor_compose(&mut self, g: MorId, f: MorId, gf: MorId) {
        let n = self.n_mor();
        self.mor_comp[g * n + f] = Some(gf);
    }

    pub fn set_vcomp(&mut self, b: CellId, a: CellId, ba: CellId) {
        let n = self.n_cells();
        self.vcomp[b * n + a] = Some(ba);
    }

    pub fn set_hcomp(&mut self, b: CellId, a: CellId, ba: CellId) {
        let n = self.n_cells();
        self.hcomp[b * n + a] = Some(ba);
    }

    pub fn compose_mor(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.mor_comp[g * self.n_mor() + f]
    }

    pub fn vcomp(&self, b: CellId, a: CellId) -> Option<CellId> {
        self.vcomp[b * self.n_cells() + a]
    }

    pub fn hcomp(&self, b: CellId, a: CellId) -> Option<CellId> {
        self.hcomp[b * self.n_cells() + a]
    }

    pub fn mor_composable(&self, g: MorId, f: MorId) -> bool {
        self.mor_tgt[f] == self.mor_src[g]
    }

    pub fn vcomposable(&self, b: CellId, a: CellId) -> bool {
        self.cell_tgt[a] == self.cell_src[b]
    }

    pub fn hcomposable(&self, b: CellId, a: CellId) -> bool {
        self.mor_composable(self.cell_src[b], self.cell_src[a])
            && self.mor_composable(self.cell_tgt[b], self.cell_tgt[a])
    }

    /// Whisker `a: f => f'` on the right with `m` into its source object.
    pub fn whisker_right(&self, a: CellId, m: MorId) -> Option<CellId> {
        self.hcomp(a, self.cell_id[m])
    }

    /// Whisker `a: f => f'` on the left with `m` out of its target object.
    pub fn whisker_left(&self, m: MorId, a: CellId) -> Option<CellId> {
        self.hcomp(self.cell_id[m], a)
    }

    pub fn hom_mors(&self, a: ObjId, b: ObjId) -> Vec<MorId> {
        (0..self.n_mor()).filter(|&m| self.mor_src[m] == a && self.mor_tgt[m] == b).collect()
    }

    pub fn cells_between(&self, f: MorId, g: MorId) -> Vec<CellId> {
        (0..self.n_cells()).filter(|&c| self.cell_src[c] == f && self.cell_tgt[c] == g).collect()
    }

    /// Least vertical inverse of a 2-cell, if one exists.
    pub fn cell_inverse(&self, c: CellId) -> Option<CellId> {
        let (f, g) = (self.cell_src[c], self.cell_tgt[c]);
        (0..self.n_cells()).find(|&w| {
            self.cell_src[w] == g
                && self.cell_tgt[w] == f
                && self.vcomp(w, c) == Some(self.cell_id[f])
                && self.vcomp(c, w) == Some(self.cell_id[g])
        })
    }

    pub fn cell_invertible(&self, c: CellId) -> bool {
        self.cell_inverse(c).is_some()
    }

    pub fn mor_label(&self, m: MorId) -> String {
        self.mor_names.get(m).cloned().unwrap_or_else(|| format!("#{m}"))
    }

    pub fn cell_label(&self, c: CellId) -> String {
        self.cell_names.get(c).cloned().unwrap_or_else(|| format!("#{c}"))
    }

    /// The hom-category from `a` to `b` as a [`FinCat`], with decode tables
    /// back to global morphism and 2-cell ids.
    pub fn hom_cat(&self, a: ObjId, b: ObjId) -> (FinCat, Vec<MorId>, Vec<CellId>) {
        let obj_decode = self.hom_mors(a, b);
        let mut cat = FinCat::new(format!("{}({},{})", self.name, self.objects[a], self.objects[b]));
        for &m in &obj_decode {
            cat.add_object(self.mor_label(m));
        }
        let local_obj = |m: MorId| obj_decode.iter().position(|&x| x == m).unwrap();
        let mut mor_decode = Vec::new();
        for c in 0..self.n_cells() {
            if obj_decode.contains(&self.cell_src[c]) && obj_decode.contains(&self.cell_tgt[c]) {
                cat.add_mor(self.cell_label(c), local_obj(self.cell_src[c]), local_obj(self.cell_tgt[c]));
                mor_decode.push(c);
            }
        }
        let local_mor = |c: CellId| mor_decode.iter().position(|&x| x == c).unwrap();
        for (i, &m) in obj_decode.iter().enumerate() {
            cat.set_identity(i, local_mor(self.cell_id[m]));
        }
        for (gi, &g) in mor_decode.iter().enumerate() {
            for (fi, &f) in mor_decode.iter().enumerate() {
                if self.vcomposable(g, f) {
                    let gf = self.vcomp(g, f).expect("validated 2-category");
                    cat.set_compose(gi, fi, local_mor(gf));
                }
            }
        }
        (cat, obj_decode, mor_decode)
    }

    /// The underlying 1-category (objects and morphisms).
    pub fn underlying_cat(&self) -> FinCat {
        let mut c = FinCat::new(self.name.clone());
        c.objects = self.objects.clone();
        c.mor_names = self.mor_names.clone();
        c.src = self.mor_src.clone();
        c.tgt = self.mor_tgt.clone();
        c.identity = self.mor_id.clone();
        c.alloc_compose_table();
        let n = self.n_mor();
        for g in 0..n {
            for f in 0..n {
                if let Some(h) = self.compose_mor(g, f) {
                    c.set_compose(g, f, h);
                }
            }
        }
        c
    }

    /// Structural equality of all id tables, ignoring names.
    pub fn tables_eq(&self, other: &Fin2Cat) -> bool {
        self.n_objects() == other.n_objects()
            && self.mor_src == other.mor_src
            && self.mor_tgt == other.mor_tgt
            && self.mor_id == other.mor_id
            && self.mor_comp == other.mor_comp
            && self.cell_src == other.cell_src
            && self.cell_tgt == other.cell_tgt
            && self.cell_id == other.cell_id
            && self.vcomp == other.vcomp
            && self.hcomp == other.hcomp
    }

    fn well_formed(&self) -> Result<()> {
        let (no, nm, nc) = (self.n_objects(), self.n_mor(), self.n_cells());
        let bad = |detail: String| Error::MalformedTable { structure: self.name.clone(), detail };
        if self.mor_src.iter().chain(&self.mor_tgt).any(|&o| o >= no) {
            return Err(bad("morphism endpoint out of range".into()));
        }
        if self.mor_id.iter().any(|&m| m >= nm) {
            return Err(bad("object identity out of range".into()));
        }
        if self.cell_src.iter().chain(&self.cell_tgt).any(|&m| m >= nm) {
            return Err(bad("2-cell boundary out of range".into()));
        }
        if self.cell_id.iter().any(|&c| c >= nc) {
            return Err(bad("morphism identity 2-cell out of range".into()));
        }
        if self.mor_comp.len() != nm * nm || self.vcomp.len() != nc * nc || self.hcomp.len() != nc * nc {
            return Err(bad("composition table has wrong size".into()));
        }
        if self.mor_comp.iter().flatten().any(|&h| h >= nm)
            || self.vcomp.iter().flatten().any(|&h| h >= nc)
            || self.hcomp.iter().flatten().any(|&h| h >= nc)
        {
            return Err(bad("composite references unknown id".into()));
        }
        Ok(())
    }
}

/// Exhaustively check all 2-category axioms, including middle-four interchange.
pub fn validate_fin_2cat(a: &Fin2Cat) -> Result<Report> {
    a.well_formed()?;
    let mut report = crate::cat::validate_fin_cat(&a.underlying_cat())?;
    let nc = a.n_cells();

    // 2-cell boundaries are parallel.
    for c in 0..nc {
        let (f, g) = (a.cell_src[c], a.cell_tgt[c]);
        if a.mor_src[f] != a.mor_src[g] || a.mor_tgt[f] != a.mor_tgt[g] {
            report.violate("parallel boundary", vec![a.cell_label(c)]);
        }
    }
    for m in 0..a.n_mor() {
        let i = a.cell_id[m];
        if a.cell_src[i] != m || a.cell_tgt[i] != m {
            report.violate("identity 2-cell boundary", vec![a.mor_label(m), a.cell_label(i)]);
        }
    }

    // Vertical composition: totality, boundaries, units, associativity.
    for b in 0..nc {
        for c in 0..nc {
            match (a.vcomposable(b, c), a.vcomp(b, c)) {
                (true, None) => report.violate("vcompose total", vec![a.cell_label(b), a.cell_label(c)]),
                (false, Some(_)) => {
                    report.violate("vcompose on non-composable", vec![a.cell_label(b), a.cell_label(c)])
                }
                (true, Some(h)) => {
                    if a.cell_src[h] != a.cell_src[c] || a.cell_tgt[h] != a.cell_tgt[b] {
                        report.violate("vcompose boundary", vec![a.cell_label(b), a.cell_label(c)]);
                    }
                }
                _ => {}
            }
        }
    }
    for c in 0..nc {
        let (f, g) = (a.cell_src[c], a.cell_tgt[c]);
        if a.vcomp(c, a.cell_id[f]) != Some(c) || a.vcomp(a.cell_id[g], c) != Some(c) {
            report.violate("vcompose unit", vec![a.cell_label(c)]);
        }
    }
    for x in 0..nc {
        for y in 0..nc {
            if !a.vcomposable(x, y) {
                continue;
            }
            for z in 0..nc {
                if !a.vcomposable(y, z) {
                    continue;
                }
                let l = a.vcomp(x, y).and_then(|xy| a.vcomp(xy, z));
                let r = a.vcomp(y, z).and_then(|yz| a.vcomp(x, yz));
                if l != r || l.is_none() {
                    report.violate(
                        "vcompose associativity",
                        vec![a.cell_label(x), a.cell_label(y), a.cell_label(z)],
                    );
                }
            }
        }
    }

    // Horizontal composition: totality, boundaries, units, associativity,
    // functoriality of identities.
    for b in 0..nc {
        for c in 0..nc {
            match (a.hcomposable(b, c), a.hcomp(b, c)) {
                (true, None) => report.violate("hcompose total", vec![a.cell_label(b), a.cell_label(c)]),
                (false, Some(_)) => {
                    report.violate("hcompose on non-composable", vec![a.cell_label(b), a.cell_label(c)])
                }
                (true, Some(h)) => {
                    let src_ok = a.compose_mor(a.cell_src[b], a.cell_src[c]) == Some(a.cell_src[h]);
                    let tgt_ok = a.compose_mor(a.cell_tgt[b], a.cell_tgt[c]) == Some(a.cell_tgt[h]);
                    if !src_ok || !tgt_ok {
                        report.violate("hcompose boundary", vec![a.cell_label(b), a.cell_label(c)]);
                    }
                }
                _ => {}
            }
        }
    }
    for c in 0..nc {
        let s = a.mor_src[a.cell_src[c]];
        let t = a.mor_tgt[a.cell_src[c]];
        if a.hcomp(c, a.cell_id[a.mor_id[s]]) != Some(c) || a.hcomp(a.cell_id[a.mor_id[t]], c) != Some(c) {
            report.violate("hcompose unit", vec![a.cell_label(c)]);
        }
    }
    for x in 0..nc {
        for y in 0..nc {
            if !a.hcomposable(x, y) {
                continue;
            }
            for z in 0..nc {
                if !a.hcomposable(y, z) {
                    continue;
                }
                let l = a.hcomp(x, y).and_then(|xy| a.hcomp(xy, z));
                let r = a.hcomp(y, z).and_then(|yz| a.hcomp(x, yz));
                if l != r || l.is_none() {
                    report.violate(
                        "hcompose associativity",
                        vec![a.cell_label(x), a.cell_label(y), a.cell_label(z)],
                    );
                }
            }
        }
    }
    for g in 0..a.n_mor() {
        for f in 0..a.n_mor() {
            if let Some(gf) = a.compose_mor(g, f) {
                if a.hcomp(a.cell_id[g], a.cell_id[f]) != Some(a.cell_id[gf]) {
                    report.violate("identity whisker", vec![a.mor_label(g), a.mor_label(f)]);
                }
            }
        }
    }

    // Middle-four interchange: (b' * a') . (b * a) = (b' . b) * (a' . a),
    // where * is vertical and . is horizontal composition.
    for a1 in 0..nc {
        for b1 in 0..nc {
            if !a.hcomposable(b1, a1) {
                continue;
            }
            for a2 in 0..nc {
                if !a.vcomposable(a2, a1) {
                    continue;
                }
                for b2 in 0..nc {
                    if !a.vcomposable(b2, b1) {
                        continue;
                    }
                    let left = a
                        .vcomp(a2, a1)
                        .zip(a.vcomp(b2, b1))
                        .and_then(|(va, vb)| a.hcomp(vb, va));
                    let right = a
                        .hcomp(b1, a1)
                        .zip(a.hcomp(b2, a2))
                        .and_then(|(h1, h2)| a.vcomp(h2, h1));
                    if left != right || left.is_none() {
                        report.violate(
                            "interchange",
                            vec![a.cell_label(a1), a.cell_label(b1), a.cell_label(a2), a.cell_label(b2)],
                        );
                    }
                }
            }
        }
    }

    Ok(report)
}

/// Identity-on-everything structural map used where an explicit 2-category is
/// expected behind an `Arc`.
pub fn arc(a: Fin2Cat) -> Arc<Fin2Cat> {
    Arc::new(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixture_2cats_validate() {
        for a in [
            fixtures::term_2cat(),
            fixtures::arr(),
            fixtures::cell(),
            fixtures::icell(),
            fixtures::iso_2cat(),
        ] {
            let report = validate_fin_2cat(&a).unwrap();
            assert!(report.ok(), "{}: {report}", a.name);
        }
    }

    #[test]
    fn cell_counts() {
        let cell = fixtures::cell();
        assert_eq!(cell.n_objects(), 2);
        assert_eq!(cell.n_mor(), 4);
        assert_eq!(cell.n_cells(), 5);
        assert!(!cell.cell_invertible(fixtures::CELL_ALPHA));
        let icell = fixtures::icell();
        assert_eq!(icell.n_cells(), 6);
        assert!(icell.cell_invertible(4));
    }

    #[test]
    fn corrupted_whisker_fails() {
        let mut cell = fixtures::cell();
        // Retarget a horizontal composite with an identity: breaks the unit law.
        let alpha = fixtures::CELL_ALPHA;
        let id0 = cell.cell_id[cell.mor_id[0]];
        cell.set_hcomp(alpha, id0, id0);
        let report = validate_fin_2cat(&cell).unwrap();
        assert!(!report.ok());
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom.contains("hcompose") || v.axiom.contains("interchange")));
    }

    #[test]
    fn hom_cat_of_cell() {
        let cell = fixtures::cell();
        let (hom, objs, mors) = cell.hom_cat(0, 1);
        assert_eq!(objs.len(), 2); // f, g
        assert_eq!(mors.len(), 3); // id_f, id_g, alpha
        assert!(crate::cat::validate_fin_cat(&hom).unwrap().ok());
    }
}
