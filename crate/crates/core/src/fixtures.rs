//! Canonical fixture structures used throughout the test suites and shipped
//! with the command-line front end.

use std::sync::Arc;

use crate::cat::{CatFunctor, FinCat};
use crate::dbl_cat::{Boundary, FinDblCat};
use crate::maps::{CatPsFun, PseudoFunctor2};
use crate::two_cat::Fin2Cat;

/// Index of the non-trivial 2-cell `alpha: f => g` in [`cell`].
pub const CELL_ALPHA: usize = 4;
/// Index of the generating vertical morphism `u` in [`varr`].
pub const VARR_U: usize = 2;

/// The terminal category: one object, its identity.
pub fn term_cat() -> FinCat {
    let mut c = FinCat::new("TERM");
    let star = c.add_object("*");
    let id = c.add_mor("id_*", star, star);
    c.set_identity(star, id);
    c.set_compose(id, id, id);
    c
}

/// The walking arrow category `2 = {a -> b}`.
pub fn two_cat_cat() -> FinCat {
    let mut c = FinCat::new("TWO");
    let a = c.add_object("a");
    let b = c.add_object("b");
    let ida = c.add_mor("id_a", a, a);
    let idb = c.add_mor("id_b", b, b);
    let m = c.add_mor("m", a, b);
    c.set_identity(a, ida);
    c.set_identity(b, idb);
    c.set_compose(ida, ida, ida);
    c.set_compose(idb, idb, idb);
    c.set_compose(m, ida, m);
    c.set_compose(idb, m, m);
    c
}

/// The walking isomorphism `a ~ b`.
pub fn iso_cat() -> FinCat {
    let mut c = FinCat::new("ISO");
    let a = c.add_object("a");
    let b = c.add_object("b");
    let ida = c.add_mor("id_a", a, a);
    let idb = c.add_mor("id_b", b, b);
    let f = c.add_mor("f", a, b);
    let g = c.add_mor("g", b, a);
    c.set_identity(a, ida);
    c.set_identity(b, idb);
    c.set_compose(ida, ida, ida);
    c.set_compose(f, ida, f);
    c.set_compose(idb, idb, idb);
    c.set_compose(g, idb, g);
    c.set_compose(idb, f, f);
    c.set_compose(g, f, ida);
    c.set_compose(ida, g, g);
    c.set_compose(f, g, idb);
    c
}

/// A category as a 2-category with only identity 2-cells.
pub fn locally_discrete(cat: &FinCat, name: impl Into<String>) -> Fin2Cat {
    let mut a = Fin2Cat::new(name);
    for o in &cat.objects {
        a.add_object(o.clone());
    }
    for m in 0..cat.n_mor() {
        a.add_mor(cat.mor_label(m), cat.src[m], cat.tgt[m]);
    }
    for (o, &i) in cat.identity.iter().enumerate() {
        a.set_mor_identity(o, i);
    }
    for g in 0..cat.n_mor() {
        for f in 0..cat.n_mor() {
            if let Some(h) = cat.compose(g, f) {
                a.set_mor_compose(g, f, h);
            }
        }
    }
    for m in 0..cat.n_mor() {
        let c = a.add_cell(format!("i_{}", cat.mor_label(m)), m, m);
        a.set_cell_identity(m, c);
    }
    for m in 0..cat.n_mor() {
        a.set_vcomp(m, m, m);
    }
    for g in 0..cat.n_mor() {
        for f in 0..cat.n_mor() {
            if let Some(h) = cat.compose(g, f) {
                a.set_hcomp(g, f, h);
            }
        }
    }
    a
}

/// The suspension of a category `hom`: two objects `0, 1`, with
/// `hom(0, 1) = hom` and trivial endo-homs. Composition only involves
/// identities, so the result is a valid 2-category for any input.
pub fn suspension(hom: &FinCat, name: impl Into<String>) -> Fin2Cat {
    let mut a = Fin2Cat::new(name);
    let o0 = a.add_object("0");
    let o1 = a.add_object("1");
    let id0 = a.add_mor("id_0", o0, o0);
    let id1 = a.add_mor("id_1", o1, o1);
    a.set_mor_identity(o0, id0);
    a.set_mor_identity(o1, id1);
    // One morphism 0 -> 1 per object of `hom`.
    let base = a.n_mor();
    for k in 0..hom.n_objects() {
        a.add_mor(hom.objects[k].clone(), o0, o1);
    }
    a.set_mor_compose(id0, id0, id0);
    a.set_mor_compose(id1, id1, id1);
    for k in 0..hom.n_objects() {
        a.set_mor_compose(base + k, id0, base + k);
        a.set_mor_compose(id1, base + k, base + k);
    }
    // Identity 2-cells on the endpoint identities, then one 2-cell per
    // morphism of `hom`.
    let c0 = a.add_cell("i_id_0", id0, id0);
    let c1 = a.add_cell("i_id_1", id1, id1);
    a.set_cell_identity(id0, c0);
    a.set_cell_identity(id1, c1);
    let cbase = a.n_cells();
    for j in 0..hom.n_mor() {
        a.add_cell(hom.mor_label(j), base + hom.src[j], base + hom.tgt[j]);
    }
    for k in 0..hom.n_objects() {
        a.set_cell_identity(base + k, cbase + hom.identity[k]);
    }
    a.set_vcomp(c0, c0, c0);
    a.set_vcomp(c1, c1, c1);
    for g in 0..hom.n_mor() {
        for f in 0..hom.n_mor() {
            if let Some(h) = hom.compose(g, f) {
                a.set_vcomp(cbase + g, cbase + f, cbase + h);
            }
        }
    }
    a.set_hcomp(c0, c0, c0);
    a.set_hcomp(c1, c1, c1);
    for j in 0..hom.n_mor() {
        a.set_hcomp(cbase + j, c0, cbase + j);
        a.set_hcomp(c1, cbase + j, cbase + j);
    }
    a
}

/// The terminal 2-category.
pub fn term_2cat() -> Fin2Cat {
    locally_discrete(&term_cat(), "TERM")
}

/// The walking arrow as a 2-category (trivial 2-cells).
pub fn arr() -> Fin2Cat {
    locally_discrete(&two_cat_cat(), "ARR")
}

/// The walking 2-cell: `alpha: f => g` between parallel `f, g: 0 -> 1`.
pub fn cell() -> Fin2Cat {
    suspension(&two_cat_cat(), "CELL")
}

/// The walking invertible 2-cell.
pub fn icell() -> Fin2Cat {
    suspension(&iso_cat(), "ICELL")
}

/// The walking isomorphism as a locally discrete 2-category.
pub fn iso_2cat() -> Fin2Cat {
    locally_discrete(&iso_cat(), "ISO")
}

/// Fill in the composites that are forced by the unit laws. Panics if a
/// composable pair is not unit-forced, so this is only for structures that
/// are free on their generating cells.
fn complete_unit_composites(d: &mut FinDblCat) {
    for g in 0..d.n_hm() {
        for f in 0..d.n_hm() {
            if d.hm_composable(g, f) {
                if f == d.hm_id[d.hm_src[g]] {
                    d.set_hm_compose(g, f, g);
                } else if g == d.hm_id[d.hm_tgt[f]] {
                    d.set_hm_compose(g, f, f);
                } else {
                    panic!("horizontal composite {g}.{f} not unit-forced");
                }
            }
        }
    }
    for g in 0..d.n_vm() {
        for f in 0..d.n_vm() {
            if d.vm_composable(g, f) {
                if f == d.vm_id[d.vm_src[g]] {
                    d.set_vm_compose(g, f, g);
                } else if g == d.vm_id[d.vm_tgt[f]] {
                    d.set_vm_compose(g, f, f);
                } else {
                    panic!("vertical composite {g}.{f} not unit-forced");
                }
            }
        }
    }
    for b in 0..d.n_sq() {
        for a in 0..d.n_sq() {
            if d.sq_hcomposable(b, a) {
                if a == d.sq_hid[d.sq_left[b]] {
                    d.set_sq_hcomp(b, a, b);
                } else if b == d.sq_hid[d.sq_right[a]] {
                    d.set_sq_hcomp(b, a, a);
                } else {
                    panic!("square hcomposite {b}.{a} not unit-forced");
                }
            }
            if d.sq_vcomposable(b, a) {
                if a == d.sq_vid[d.sq_top[b]] {
                    d.set_sq_vcomp(b, a, b);
                } else if b == d.sq_vid[d.sq_bottom[a]] {
                    d.set_sq_vcomp(b, a, a);
                } else {
                    panic!("square vcomposite {b}.{a} not unit-forced");
                }
            }
        }
    }
}

/// The free double category on one vertical morphism `u: 0 -> 1`.
pub fn varr() -> FinDblCat {
    let mut d = FinDblCat::new("VARR");
    let o0 = d.add_object("0");
    let o1 = d.add_object("1");
    let id0 = d.add_hm("id_0", o0, o0);
    let id1 = d.add_hm("id_1", o1, o1);
    d.set_hm_identity(o0, id0);
    d.set_hm_identity(o1, id1);
    let v0 = d.add_vm("vid_0", o0, o0);
    let v1 = d.add_vm("vid_1", o1, o1);
    let u = d.add_vm("u", o0, o1);
    d.set_vm_identity(o0, v0);
    d.set_vm_identity(o1, v1);
    let ii0 = d.add_sq("ii_0", Boundary { top: id0, bottom: id0, left: v0, right: v0 });
    let ii1 = d.add_sq("ii_1", Boundary { top: id1, bottom: id1, left: v1, right: v1 });
    let idu = d.add_sq("id_u", Boundary { top: id0, bottom: id1, left: u, right: u });
    d.set_sq_hid(v0, ii0);
    d.set_sq_hid(v1, ii1);
    d.set_sq_hid(u, idu);
    d.set_sq_vid(id0, ii0);
    d.set_sq_vid(id1, ii1);
    complete_unit_composites(&mut d);
    d
}

/// The free double category on one square.
pub fn sq_dbl() -> FinDblCat {
    let mut d = FinDblCat::new("SQ");
    let t0 = d.add_object("t0");
    let t1 = d.add_object("t1");
    let b0 = d.add_object("b0");
    let b1 = d.add_object("b1");
    let mut hid = Vec::new();
    let mut vid = Vec::new();
    for o in 0..4 {
        let h = d.add_hm(format!("id_{}", d.objects[o].clone()), o, o);
        d.set_hm_identity(o, h);
        hid.push(h);
    }
    let a = d.add_hm("a", t0, t1);
    let b = d.add_hm("b", b0, b1);
    for o in 0..4 {
        let v = d.add_vm(format!("vid_{}", d.objects[o].clone()), o, o);
        d.set_vm_identity(o, v);
        vid.push(v);
    }
    let u = d.add_vm("u", t0, b0);
    let v = d.add_vm("v", t1, b1);
    let mut ii = Vec::new();
    for o in 0..4 {
        let s = d.add_sq(
            format!("ii_{}", d.objects[o].clone()),
            Boundary { top: hid[o], bottom: hid[o], left: vid[o], right: vid[o] },
        );
        d.set_sq_hid(vid[o], s);
        d.set_sq_vid(hid[o], s);
        ii.push(s);
    }
    let vida = d.add_sq("vid_a", Boundary { top: a, bottom: a, left: vid[t0], right: vid[t1] });
    d.set_sq_vid(a, vida);
    let vidb = d.add_sq("vid_b", Boundary { top: b, bottom: b, left: vid[b0], right: vid[b1] });
    d.set_sq_vid(b, vidb);
    let hidu = d.add_sq("hid_u", Boundary { top: hid[t0], bottom: hid[b0], left: u, right: u });
    d.set_sq_hid(u, hidu);
    let hidv = d.add_sq("hid_v", Boundary { top: hid[t1], bottom: hid[b1], left: v, right: v });
    d.set_sq_hid(v, hidv);
    d.add_sq("sigma", Boundary { top: a, bottom: b, left: u, right: v });
    complete_unit_composites(&mut d);
    d
}

/// The free double category on a parallel pair of one horizontal morphism
/// `h: 0 -> 1` and one vertical morphism `u: 0 -> 1`, with no square relating
/// them. Object 0 is bi-initial in the underlying horizontal 2-category but
/// is not double bi-initial.
pub fn free_vh() -> FinDblCat {
    let mut d = FinDblCat::new("VHARR");
    let o0 = d.add_object("0");
    let o1 = d.add_object("1");
    let id0 = d.add_hm("id_0", o0, o0);
    let id1 = d.add_hm("id_1", o1, o1);
    let h = d.add_hm("h", o0, o1);
    d.set_hm_identity(o0, id0);
    d.set_hm_identity(o1, id1);
    let v0 = d.add_vm("vid_0", o0, o0);
    let v1 = d.add_vm("vid_1", o1, o1);
    let u = d.add_vm("u", o0, o1);
    d.set_vm_identity(o0, v0);
    d.set_vm_identity(o1, v1);
    let ii0 = d.add_sq("ii_0", Boundary { top: id0, bottom: id0, left: v0, right: v0 });
    let ii1 = d.add_sq("ii_1", Boundary { top: id1, bottom: id1, left: v1, right: v1 });
    let vidh = d.add_sq("vid_h", Boundary { top: h, bottom: h, left: v0, right: v1 });
    let hidu = d.add_sq("hid_u", Boundary { top: id0, bottom: id1, left: u, right: u });
    d.set_sq_hid(v0, ii0);
    d.set_sq_hid(v1, ii1);
    d.set_sq_hid(u, hidu);
    d.set_sq_vid(id0, ii0);
    d.set_sq_vid(id1, ii1);
    d.set_sq_vid(h, vidh);
    complete_unit_composites(&mut d);
    d
}

/// The constant presheaf on the terminal 2-category with value `value`.
pub fn constant_psfun(value: FinCat, name: impl Into<String>) -> CatPsFun {
    CatPsFun::constant(Arc::new(term_2cat()), Arc::new(value), name)
}

/// Constant presheaf at the walking isomorphism.
pub fn f_iso() -> CatPsFun {
    constant_psfun(iso_cat(), "F_ISO")
}

/// Constant presheaf at the walking arrow category.
pub fn f_arr() -> CatPsFun {
    constant_psfun(two_cat_cat(), "F_ARR")
}

/// Constant presheaf at the terminal category.
pub fn f_term() -> CatPsFun {
    constant_psfun(term_cat(), "F_TERM")
}

/// The collapse functor CELL -> ARR: both parallel morphisms go to the
/// arrow, the generating 2-cell goes to its identity.
pub fn collapse_cell_to_arr() -> PseudoFunctor2 {
    let cell = Arc::new(cell());
    let arr = Arc::new(arr());
    // CELL morphisms: id_0, id_1, f, g; ARR morphisms: id_0, id_1, f.
    let mor_map = vec![0, 1, 2, 2];
    // CELL cells: i_id_0, i_id_1, i_f, i_g, alpha; ARR cells: one per morphism.
    let cell_map = vec![0, 1, 2, 2, 2];
    PseudoFunctor2::strict("collapse", cell, arr, vec![0, 1], mor_map, cell_map)
}

/// A presheaf over ARR with the walking arrow category at both objects and
/// the identity action on the generator. Useful as a mutable starting point
/// for counterexample tests.
pub fn presheaf_over_arr() -> CatPsFun {
    let base = Arc::new(arr());
    let value = Arc::new(two_cat_cat());
    let values = vec![value.clone(), value.clone()];
    let on_mor = vec![
        CatFunctor::identity(value.clone()),
        CatFunctor::identity(value.clone()),
        CatFunctor::identity(value.clone()),
    ];
    let on_cell = (0..base.n_cells())
        .map(|_| (0..value.n_objects()).map(|x| value.identity[x]).collect())
        .collect();
    let mut f = CatPsFun {
        name: "P_ARR".into(),
        base,
        values,
        on_mor,
        on_cell,
        compositors: Default::default(),
    };
    f.fill_strict_compositors();
    f
}
