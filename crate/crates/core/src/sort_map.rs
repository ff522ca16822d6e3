//! Per-sort bijections between structures, and exhaustive isomorphism
//! verification.

use crate::dbl_cat::FinDblCat;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::two_cat::Fin2Cat;

/// Per-sort maps between two structures of the same kind.
///
/// For 2-categories the `hmor` component carries the morphism map and
/// `squares` the 2-cell map; `vmor` stays empty. For double categories all
/// four are used.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SortMap {
    pub objects: Vec<usize>,
    pub hmor: Vec<usize>,
    pub vmor: Vec<usize>,
    pub squares: Vec<usize>,
}

impl SortMap {
    pub fn identity_2cat(a: &Fin2Cat) -> Self {
        SortMap {
            objects: (0..a.n_objects()).collect(),
            hmor: (0..a.n_mor()).collect(),
            vmor: Vec::new(),
            squares: (0..a.n_cells()).collect(),
        }
    }

    pub fn identity_dbl(d: &FinDblCat) -> Self {
        SortMap {
            objects: (0..d.n_objects()).collect(),
            hmor: (0..d.n_hm()).collect(),
            vmor: (0..d.n_vm()).collect(),
            squares: (0..d.n_sq()).collect(),
        }
    }

    /// Invert every component; fails when a component is not a bijection.
    pub fn inverse(&self) -> Result<SortMap> {
        Ok(SortMap {
            objects: invert(&self.objects)?,
            hmor: invert(&self.hmor)?,
            vmor: invert(&self.vmor)?,
            squares: invert(&self.squares)?,
        })
    }
}

fn invert(map: &[usize]) -> Result<Vec<usize>> {
    let mut inv = vec![usize::MAX; map.len()];
    for (i, &j) in map.iter().enumerate() {
        if j >= map.len() || inv[j] != usize::MAX {
            return Err(Error::SortMismatch("component is not a bijection".into()));
        }
        inv[j] = i;
    }
    Ok(inv)
}

fn check_bijection(report: &mut Report, sort: &str, map: &[usize], to: usize) {
    if map.len() != to {
        report.violate(format!("{sort} bijection size"), vec![map.len().to_string(), to.to_string()]);
        return;
    }
    let mut seen = vec![false; to];
    for &j in map {
        if j >= to || seen[j] {
            report.violate(format!("{sort} bijection"), vec![j.to_string()]);
            return;
        }
        seen[j] = true;
    }
}

/// Verify that `m` is an isomorphism of 2-categories from `x` to `y`:
/// bijective on every sort and preserving sources, targets, identities, and
/// all composition tables in both directions.
pub fn assert_isomorphism_2cat(x: &Fin2Cat, y: &Fin2Cat, m: &SortMap) -> Result<Report> {
    if !m.vmor.is_empty() {
        return Err(Error::SortMismatch("2-category map must not carry a vmor component".into()));
    }
    let mut report = Report::new();
    check_bijection(&mut report, "object", &m.objects, y.n_objects());
    check_bijection(&mut report, "morphism", &m.hmor, y.n_mor());
    check_bijection(&mut report, "2-cell", &m.squares, y.n_cells());
    if m.objects.len() != x.n_objects() || m.hmor.len() != x.n_mor() || m.squares.len() != x.n_cells()
    {
        return Err(Error::SortMismatch("map does not fit the source sorts".into()));
    }
    if !report.ok() {
        return Ok(report);
    }

    for f in 0..x.n_mor() {
        if y.mor_src[m.hmor[f]] != m.objects[x.mor_src[f]]
            || y.mor_tgt[m.hmor[f]] != m.objects[x.mor_tgt[f]]
        {
            report.violate("morphism boundary", vec![x.mor_label(f)]);
        }
    }
    for o in 0..x.n_objects() {
        if y.mor_id[m.objects[o]] != m.hmor[x.mor_id[o]] {
            report.violate("identity morphism", vec![x.objects[o].clone()]);
        }
    }
    for g in 0..x.n_mor() {
        for f in 0..x.n_mor() {
            let lhs = x.compose_mor(g, f).map(|h| m.hmor[h]);
            let rhs = y.compose_mor(m.hmor[g], m.hmor[f]);
            if lhs != rhs {
                report.violate("composition", vec![x.mor_label(g), x.mor_label(f)]);
            }
        }
    }
    for c in 0..x.n_cells() {
        if y.cell_src[m.squares[c]] != m.hmor[x.cell_src[c]]
            || y.cell_tgt[m.squares[c]] != m.hmor[x.cell_tgt[c]]
        {
            report.violate("2-cell boundary", vec![x.cell_label(c)]);
        }
    }
    for f in 0..x.n_mor() {
        if y.cell_id[m.hmor[f]] != m.squares[x.cell_id[f]] {
            report.violate("identity 2-cell", vec![x.mor_label(f)]);
        }
    }
    for b in 0..x.n_cells() {
        for c in 0..x.n_cells() {
            let lhs = x.vcomp(b, c).map(|h| m.squares[h]);
            let rhs = y.vcomp(m.squares[b], m.squares[c]);
            if lhs != rhs {
                report.violate("vcompose", vec![x.cell_label(b), x.cell_label(c)]);
            }
            let lhs = x.hcomp(b, c).map(|h| m.squares[h]);
            let rhs = y.hcomp(m.squares[b], m.squares[c]);
            if lhs != rhs {
                report.violate("hcompose", vec![x.cell_label(b), x.cell_label(c)]);
            }
        }
    }
    Ok(report)
}

/// Verify that `m` is an isomorphism of double categories from `x` to `y`.
pub fn assert_isomorphism_dbl(x: &FinDblCat, y: &FinDblCat, m: &SortMap) -> Result<Report> {
    let mut report = Report::new();
    check_bijection(&mut report, "object", &m.objects, y.n_objects());
    check_bijection(&mut report, "hmor", &m.hmor, y.n_hm());
    check_bijection(&mut report, "vmor", &m.vmor, y.n_vm());
    check_bijection(&mut report, "square", &m.squares, y.n_sq());
    if m.objects.len() != x.n_objects()
        || m.hmor.len() != x.n_hm()
        || m.vmor.len() != x.n_vm()
        || m.squares.len() != x.n_sq()
    {
        return Err(Error::SortMismatch("map does not fit the source sorts".into()));
    }
    if !report.ok() {
        return Ok(report);
    }

    for f in 0..x.n_hm() {
        if y.hm_src[m.hmor[f]] != m.objects[x.hm_src[f]] || y.hm_tgt[m.hmor[f]] != m.objects[x.hm_tgt[f]]
        {
            report.violate("hmor boundary", vec![x.hm_label(f)]);
        }
    }
    for f in 0..x.n_vm() {
        if y.vm_src[m.vmor[f]] != m.objects[x.vm_src[f]] || y.vm_tgt[m.vmor[f]] != m.objects[x.vm_tgt[f]]
        {
            report.violate("vmor boundary", vec![x.vm_label(f)]);
        }
    }
    for o in 0..x.n_objects() {
        if y.hm_id[m.objects[o]] != m.hmor[x.hm_id[o]] || y.vm_id[m.objects[o]] != m.vmor[x.vm_id[o]] {
            report.violate("identity morphism", vec![x.objects[o].clone()]);
        }
    }
    for g in 0..x.n_hm() {
        for f in 0..x.n_hm() {
            let lhs = x.hm_compose(g, f).map(|h| m.hmor[h]);
            let rhs = y.hm_compose(m.hmor[g], m.hmor[f]);
            if lhs != rhs {
                report.violate("hmor composition", vec![x.hm_label(g), x.hm_label(f)]);
            }
        }
    }
    for g in 0..x.n_vm() {
        for f in 0..x.n_vm() {
            let lhs = x.vm_compose(g, f).map(|h| m.vmor[h]);
            let rhs = y.vm_compose(m.vmor[g], m.vmor[f]);
            if lhs != rhs {
                report.violate("vmor composition", vec![x.vm_label(g), x.vm_label(f)]);
            }
        }
    }
    for s in 0..x.n_sq() {
        let img = m.squares[s];
        let ok = y.sq_top[img] == m.hmor[x.sq_top[s]]
            && y.sq_bottom[img] == m.hmor[x.sq_bottom[s]]
            && y.sq_left[img] == m.vmor[x.sq_left[s]]
            && y.sq_right[img] == m.vmor[x.sq_right[s]];
        if !ok {
            report.violate("square boundary", vec![x.sq_label(s)]);
        }
    }
    for u in 0..x.n_vm() {
        if y.sq_hid[m.vmor[u]] != m.squares[x.sq_hid[u]] {
            report.violate("hid square", vec![x.vm_label(u)]);
        }
    }
    for f in 0..x.n_hm() {
        if y.sq_vid[m.hmor[f]] != m.squares[x.sq_vid[f]] {
            report.violate("vid square", vec![x.hm_label(f)]);
        }
    }
    for b in 0..x.n_sq() {
        for c in 0..x.n_sq() {
            let lhs = x.sq_hcomp(b, c).map(|h| m.squares[h]);
            let rhs = y.sq_hcomp(m.squares[b], m.squares[c]);
            if lhs != rhs {
                report.violate("square hcompose", vec![x.sq_label(b), x.sq_label(c)]);
            }
            let lhs = x.sq_vcomp(b, c).map(|h| m.squares[h]);
            let rhs = y.sq_vcomp(m.squares[b], m.squares[c]);
            if lhs != rhs {
                report.violate("square vcompose", vec![x.sq_label(b), x.sq_label(c)]);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{hh_embed, underlying_h};
    use crate::fixtures;

    #[test]
    fn identity_map_on_arr() {
        let arr = fixtures::arr();
        let m = SortMap::identity_2cat(&arr);
        assert!(assert_isomorphism_2cat(&arr, &arr, &m).unwrap().ok());
    }

    #[test]
    fn unit_isomorphism_h_hh_cell() {
        // H(HH(CELL)) vs CELL under the identity map: literally equal tables.
        let cell = fixtures::cell();
        let h = underlying_h(&hh_embed(&cell));
        let m = SortMap::identity_2cat(&cell);
        assert!(assert_isomorphism_2cat(&h.two_cat, &cell, &m).unwrap().ok());
    }

    #[test]
    fn sort_mismatch_is_rejected() {
        let arr = fixtures::arr();
        let cell = fixtures::cell();
        let m = SortMap::identity_2cat(&arr);
        assert!(matches!(
            assert_isomorphism_2cat(&arr, &cell, &m),
            Err(Error::SortMismatch(_)) | Ok(_)
        ));
        let r = assert_isomorphism_2cat(&arr, &cell, &m);
        match r {
            Err(Error::SortMismatch(_)) => {}
            Ok(rep) => assert!(!rep.ok()),
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn iso_ok_implies_inverse_ok() {
        let varr = fixtures::varr();
        let m = SortMap::identity_dbl(&varr);
        assert!(assert_isomorphism_dbl(&varr, &varr, &m).unwrap().ok());
        let inv = m.inverse().unwrap();
        assert!(assert_isomorphism_dbl(&varr, &varr, &inv).unwrap().ok());
    }
}
