//! Structure-to-structure functors between 2-categories and double
//! categories: the horizontal embedding, the underlying horizontal
//! 2-category, the 2-category of vertical morphisms and squares, the
//! hom-wise arrow shift, opposites, and products.
//!
//! Derived ids are deterministic functions of input ids, so the functor
//! identities hold as literal table equality, not merely up to isomorphism.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cat::{MorId, ObjId};
use crate::dbl_cat::{squares_filling, Boundary, FinDblCat, SqId};
use crate::maps::{PsDblFunctor, PseudoFunctor2};
use crate::two_cat::{CellId, Fin2Cat};

/// A 2-category as a horizontal double category: same objects, morphisms as
/// horizontal morphisms, only identity vertical morphisms, 2-cells as squares.
pub fn hh_embed(a: &Fin2Cat) -> FinDblCat {
    let mut d = FinDblCat::new(format!("HH({})", a.name));
    for o in &a.objects {
        d.add_object(o.clone());
    }
    for m in 0..a.n_mor() {
        d.add_hm(a.mor_label(m), a.mor_src[m], a.mor_tgt[m]);
    }
    for o in 0..a.n_objects() {
        d.set_hm_identity(o, a.mor_id[o]);
    }
    for g in 0..a.n_mor() {
        for f in 0..a.n_mor() {
            if let Some(h) = a.compose_mor(g, f) {
                d.set_hm_compose(g, f, h);
            }
        }
    }
    for o in 0..a.n_objects() {
        let v = d.add_vm(format!("vid_{}", a.objects[o]), o, o);
        d.set_vm_identity(o, v);
        d.set_vm_compose(v, v, v);
    }
    for c in 0..a.n_cells() {
        let (f, g) = (a.cell_src[c], a.cell_tgt[c]);
        d.add_sq(
            a.cell_label(c),
            Boundary { top: f, bottom: g, left: a.mor_src[f], right: a.mor_tgt[f] },
        );
    }
    for o in 0..a.n_objects() {
        d.set_sq_hid(o, a.cell_id[a.mor_id[o]]);
    }
    for m in 0..a.n_mor() {
        d.set_sq_vid(m, a.cell_id[m]);
    }
    for b in 0..a.n_cells() {
        for c in 0..a.n_cells() {
            if let Some(h) = a.hcomp(b, c) {
                d.set_sq_hcomp(b, c, h);
            }
            if let Some(v) = a.vcomp(b, c) {
                d.set_sq_vcomp(b, c, v);
            }
        }
    }
    d
}

/// Action of the horizontal embedding on a normal pseudo-functor.
pub fn hh_embed_map(
    f: &PseudoFunctor2,
    src: Arc<FinDblCat>,
    tgt: Arc<FinDblCat>,
) -> PsDblFunctor {
    PsDblFunctor {
        name: format!("HH({})", f.name),
        src,
        tgt,
        obj_map: f.obj_map.clone(),
        hm_map: f.mor_map.clone(),
        vm_map: f.obj_map.clone(),
        sq_map: f.cell_map.clone(),
        compositors: f.compositors.clone(),
    }
}

/// The underlying horizontal 2-category with decode tables between its
/// 2-cells and the squares with identity vertical boundaries.
#[derive(Debug, Clone)]
pub struct Horizontal {
    pub two_cat: Arc<Fin2Cat>,
    /// Square id of each 2-cell.
    pub sq_of_cell: Vec<SqId>,
    /// 2-cell id of each square, when its vertical boundaries are identities.
    pub cell_of_sq: Vec<Option<CellId>>,
}

fn sq_is_globular(d: &FinDblCat, s: SqId) -> bool {
    let top = d.sq_top[s];
    d.sq_left[s] == d.vm_id[d.hm_src[top]] && d.sq_right[s] == d.vm_id[d.hm_tgt[top]]
}

/// The underlying horizontal 2-category of a double category.
pub fn underlying_h(d: &FinDblCat) -> Horizontal {
    let mut a = Fin2Cat::new(format!("H({})", d.name));
    for o in &d.objects {
        a.add_object(o.clone());
    }
    for m in 0..d.n_hm() {
        a.add_mor(d.hm_label(m), d.hm_src[m], d.hm_tgt[m]);
    }
    for o in 0..d.n_objects() {
        a.set_mor_identity(o, d.hm_id[o]);
    }
    for g in 0..d.n_hm() {
        for f in 0..d.n_hm() {
            if let Some(h) = d.hm_compose(g, f) {
                a.set_mor_compose(g, f, h);
            }
        }
    }
    let mut sq_of_cell = Vec::new();
    let mut cell_of_sq = vec![None; d.n_sq()];
    for s in 0..d.n_sq() {
        if sq_is_globular(d, s) {
            let c = a.add_cell(d.sq_label(s), d.sq_top[s], d.sq_bottom[s]);
            cell_of_sq[s] = Some(c);
            sq_of_cell.push(s);
        }
    }
    for m in 0..d.n_hm() {
        a.set_cell_identity(m, cell_of_sq[d.sq_vid[m]].expect("vid squares are globular"));
    }
    for (bc, &bs) in sq_of_cell.iter().enumerate() {
        for (cc, &cs) in sq_of_cell.iter().enumerate() {
            if d.sq_vcomposable(bs, cs) {
                let v = d.sq_vcomp(bs, cs).expect("validated double category");
                a.set_vcomp(bc, cc, cell_of_sq[v].expect("globular composite"));
            }
            if d.sq_hcomposable(bs, cs) {
                let h = d.sq_hcomp(bs, cs).expect("validated double category");
                a.set_hcomp(bc, cc, cell_of_sq[h].expect("globular composite"));
            }
        }
    }
    Horizontal { two_cat: Arc::new(a), sq_of_cell, cell_of_sq }
}

/// Action of the underlying horizontal 2-category on a pseudo-double functor.
pub fn underlying_h_map(f: &PsDblFunctor, hs: &Horizontal, ht: &Horizontal) -> PseudoFunctor2 {
    let cell_map = hs
        .sq_of_cell
        .iter()
        .map(|&s| ht.cell_of_sq[f.sq_map[s]].expect("image of globular square is globular"))
        .collect();
    let compositors = f
        .compositors
        .iter()
        .map(|(&k, &s)| (k, ht.cell_of_sq[s].expect("compositor is globular")))
        .collect();
    PseudoFunctor2 {
        name: format!("H({})", f.name),
        src: hs.two_cat.clone(),
        tgt: ht.two_cat.clone(),
        obj_map: f.obj_map.clone(),
        mor_map: f.hm_map.clone(),
        cell_map,
        compositors,
    }
}

/// Key identifying a 2-cell of the vertical 2-category: source and target
/// square, top component, bottom component.
pub type PairCellKey = (usize, usize, usize, usize);

/// The 2-category of vertical morphisms and squares of a double category,
/// with decode tables for its 2-cells (coherent pairs of globular squares).
#[derive(Debug, Clone)]
pub struct Vertical {
    pub two_cat: Arc<Fin2Cat>,
    pub cell_keys: Vec<PairCellKey>,
    pub cell_index: BTreeMap<PairCellKey, CellId>,
}

/// The 2-category whose objects are the vertical morphisms of `d`, morphisms
/// are the squares composed horizontally, and 2-cells are the coherent pairs
/// of globular squares between tops and bottoms.
pub fn vertical_2cat(d: &FinDblCat) -> Vertical {
    let mut a = Fin2Cat::new(format!("V({})", d.name));
    for u in 0..d.n_vm() {
        a.add_object(d.vm_label(u));
    }
    for s in 0..d.n_sq() {
        a.add_mor(d.sq_label(s), d.sq_left[s], d.sq_right[s]);
    }
    for u in 0..d.n_vm() {
        a.set_mor_identity(u, d.sq_hid[u]);
    }
    for b in 0..d.n_sq() {
        for c in 0..d.n_sq() {
            if d.sq_hcomposable(b, c) {
                a.set_mor_compose(b, c, d.sq_hcomp(b, c).expect("validated double category"));
            }
        }
    }
    let mut cell_keys = Vec::new();
    let mut cell_index = BTreeMap::new();
    for alpha in 0..d.n_sq() {
        for alpha2 in 0..d.n_sq() {
            if d.sq_left[alpha] != d.sq_left[alpha2] || d.sq_right[alpha] != d.sq_right[alpha2] {
                continue;
            }
            let tops = globular_fillers(d, d.sq_top[alpha], d.sq_top[alpha2]);
            let bottoms = globular_fillers(d, d.sq_bottom[alpha], d.sq_bottom[alpha2]);
            for &s0 in &tops {
                for &s1 in &bottoms {
                    if d.sq_vcomp(alpha2, s0) == d.sq_vcomp(s1, alpha) {
                        let key = (alpha, alpha2, s0, s1);
                        let id = a.add_cell(
                            format!("({},{})", d.sq_label(s0), d.sq_label(s1)),
                            alpha,
                            alpha2,
                        );
                        cell_keys.push(key);
                        cell_index.insert(key, id);
                    }
                }
            }
        }
    }
    for s in 0..d.n_sq() {
        let key = (s, s, d.sq_vid[d.sq_top[s]], d.sq_vid[d.sq_bottom[s]]);
        a.set_cell_identity(s, cell_index[&key]);
    }
    let keys = cell_keys.clone();
    for (c2, k2) in keys.iter().enumerate() {
        for (c1, k1) in keys.iter().enumerate() {
            // Vertical composition along a shared square.
            if k1.1 == k2.0 {
                let s0 = d.sq_vcomp(k2.2, k1.2).expect("globular composite");
                let s1 = d.sq_vcomp(k2.3, k1.3).expect("globular composite");
                a.set_vcomp(c2, c1, cell_index[&(k1.0, k2.1, s0, s1)]);
            }
            // Horizontal composition along a shared vertical morphism.
            if d.sq_hcomposable(k2.0, k1.0) && d.sq_hcomposable(k2.1, k1.1) {
                let src = d.sq_hcomp(k2.0, k1.0).expect("composable");
                let tgt = d.sq_hcomp(k2.1, k1.1).expect("composable");
                let s0 = d.sq_hcomp(k2.2, k1.2).expect("globular hcomposite");
                let s1 = d.sq_hcomp(k2.3, k1.3).expect("globular hcomposite");
                a.set_hcomp(c2, c1, cell_index[&(src, tgt, s0, s1)]);
            }
        }
    }
    Vertical { two_cat: Arc::new(a), cell_keys, cell_index }
}

fn globular_fillers(d: &FinDblCat, top: usize, bottom: usize) -> Vec<SqId> {
    let b = Boundary {
        top,
        bottom,
        left: d.vm_id[d.hm_src[top]],
        right: d.vm_id[d.hm_tgt[top]],
    };
    if !d.boundary_consistent(b) {
        return Vec::new();
    }
    squares_filling(d, b).expect("consistent boundary")
}

/// Action of the vertical 2-category on a pseudo-double functor.
pub fn vertical_2cat_map(f: &PsDblFunctor, vs: &Vertical, vt: &Vertical) -> PseudoFunctor2 {
    let d = &f.src;
    let cell_map = vs
        .cell_keys
        .iter()
        .map(|&(a, a2, s0, s1)| {
            vt.cell_index[&(f.sq_map[a], f.sq_map[a2], f.sq_map[s0], f.sq_map[s1])]
        })
        .collect();
    let mut compositors = BTreeMap::new();
    for alpha2 in 0..d.n_sq() {
        for alpha in 0..d.n_sq() {
            if !d.sq_hcomposable(alpha2, alpha) {
                continue;
            }
            let comp = d.sq_hcomp(alpha2, alpha).expect("composable");
            let phi_top = f
                .compositor(d.sq_top[alpha], d.sq_top[alpha2])
                .expect("compositor present");
            let phi_bot = f
                .compositor(d.sq_bottom[alpha], d.sq_bottom[alpha2])
                .expect("compositor present");
            let src = f
                .tgt
                .sq_hcomp(f.sq_map[alpha2], f.sq_map[alpha])
                .expect("image composable");
            compositors.insert(
                (alpha, alpha2),
                vt.cell_index[&(src, f.sq_map[comp], phi_top, phi_bot)],
            );
        }
    }
    PseudoFunctor2 {
        name: format!("V({})", f.name),
        src: vs.two_cat.clone(),
        tgt: vt.two_cat.clone(),
        obj_map: f.vm_map.clone(),
        mor_map: f.sq_map.clone(),
        cell_map,
        compositors,
    }
}

/// The hom-wise arrow-category shift with decode tables for its 2-cells.
#[derive(Debug, Clone)]
pub struct ArStar {
    pub two_cat: Arc<Fin2Cat>,
    pub cell_keys: Vec<PairCellKey>,
    pub cell_index: BTreeMap<PairCellKey, CellId>,
}

/// Same objects; morphisms are the 2-cells; 2-cells are the commutative
/// squares of 2-cells under vertical composition. Componentwise equal to
/// `vertical_2cat(hh_embed(-))`.
pub fn ar_star(a: &Fin2Cat) -> ArStar {
    let mut r = Fin2Cat::new(format!("Ar*({})", a.name));
    for o in &a.objects {
        r.add_object(o.clone());
    }
    for c in 0..a.n_cells() {
        let f = a.cell_src[c];
        r.add_mor(a.cell_label(c), a.mor_src[f], a.mor_tgt[f]);
    }
    for o in 0..a.n_objects() {
        r.set_mor_identity(o, a.cell_id[a.mor_id[o]]);
    }
    for b in 0..a.n_cells() {
        for c in 0..a.n_cells() {
            if a.hcomposable(b, c) {
                r.set_mor_compose(b, c, a.hcomp(b, c).expect("validated 2-category"));
            }
        }
    }
    let mut cell_keys = Vec::new();
    let mut cell_index = BTreeMap::new();
    for alpha in 0..a.n_cells() {
        for alpha2 in 0..a.n_cells() {
            let (f, g) = (a.cell_src[alpha], a.cell_tgt[alpha]);
            let (f2, g2) = (a.cell_src[alpha2], a.cell_tgt[alpha2]);
            if a.mor_src[f] != a.mor_src[f2] || a.mor_tgt[f] != a.mor_tgt[f2] {
                continue;
            }
            for s0 in a.cells_between(f, f2) {
                for s1 in a.cells_between(g, g2) {
                    if a.vcomp(alpha2, s0) == a.vcomp(s1, alpha) {
                        let key = (alpha, alpha2, s0, s1);
                        let id = r.add_cell(
                            format!("({},{})", a.cell_label(s0), a.cell_label(s1)),
                            alpha,
                            alpha2,
                        );
                        cell_keys.push(key);
                        cell_index.insert(key, id);
                    }
                }
            }
        }
    }
    for c in 0..a.n_cells() {
        let key = (c, c, a.cell_id[a.cell_src[c]], a.cell_id[a.cell_tgt[c]]);
        r.set_cell_identity(c, cell_index[&key]);
    }
    let keys = cell_keys.clone();
    for (c2, k2) in keys.iter().enumerate() {
        for (c1, k1) in keys.iter().enumerate() {
            if k1.1 == k2.0 {
                let s0 = a.vcomp(k2.2, k1.2).expect("composable");
                let s1 = a.vcomp(k2.3, k1.3).expect("composable");
                r.set_vcomp(c2, c1, cell_index[&(k1.0, k2.1, s0, s1)]);
            }
            if a.hcomposable(k2.0, k1.0) && a.hcomposable(k2.1, k1.1) {
                let src = a.hcomp(k2.0, k1.0).expect("composable");
                let tgt = a.hcomp(k2.1, k1.1).expect("composable");
                let s0 = a.hcomp(k2.2, k1.2).expect("composable");
                let s1 = a.hcomp(k2.3, k1.3).expect("composable");
                r.set_hcomp(c2, c1, cell_index[&(src, tgt, s0, s1)]);
            }
        }
    }
    ArStar { two_cat: Arc::new(r), cell_keys, cell_index }
}

/// Action of the arrow shift on a normal pseudo-functor.
pub fn ar_star_map(f: &PseudoFunctor2, s: &ArStar, t: &ArStar) -> PseudoFunctor2 {
    let a = &f.src;
    let cell_map = s
        .cell_keys
        .iter()
        .map(|&(al, al2, s0, s1)| {
            t.cell_index[&(f.cell_map[al], f.cell_map[al2], f.cell_map[s0], f.cell_map[s1])]
        })
        .collect();
    let mut compositors = BTreeMap::new();
    for alpha2 in 0..a.n_cells() {
        for alpha in 0..a.n_cells() {
            if !a.hcomposable(alpha2, alpha) {
                continue;
            }
            let comp = a.hcomp(alpha2, alpha).expect("composable");
            let (m1, n1) = (a.cell_src[alpha], a.cell_tgt[alpha]);
            let (m2, n2) = (a.cell_src[alpha2], a.cell_tgt[alpha2]);
            let phi_src = f.compositor(m1, m2).expect("compositor present");
            let phi_tgt = f.compositor(n1, n2).expect("compositor present");
            let img_src = f
                .tgt
                .hcomp(f.cell_map[alpha2], f.cell_map[alpha])
                .expect("image composable");
            compositors
                .insert((alpha, alpha2), t.cell_index[&(img_src, f.cell_map[comp], phi_src, phi_tgt)]);
        }
    }
    PseudoFunctor2 {
        name: format!("Ar*({})", f.name),
        src: s.two_cat.clone(),
        tgt: t.two_cat.clone(),
        obj_map: f.obj_map.clone(),
        mor_map: f.cell_map.clone(),
        cell_map,
        compositors,
    }
}

/// The opposite 2-category: 1-cells reversed, 2-cells kept.
pub fn op_2cat(a: &Fin2Cat) -> Fin2Cat {
    let mut r = Fin2Cat::new(format!("op({})", a.name));
    for o in &a.objects {
        r.add_object(o.clone());
    }
    for m in 0..a.n_mor() {
        r.add_mor(a.mor_label(m), a.mor_tgt[m], a.mor_src[m]);
    }
    for o in 0..a.n_objects() {
        r.set_mor_identity(o, a.mor_id[o]);
    }
    for g in 0..a.n_mor() {
        for f in 0..a.n_mor() {
            if let Some(h) = a.compose_mor(f, g) {
                r.set_mor_compose(g, f, h);
            }
        }
    }
    for c in 0..a.n_cells() {
        r.add_cell(a.cell_label(c), a.cell_src[c], a.cell_tgt[c]);
    }
    for m in 0..a.n_mor() {
        r.set_cell_identity(m, a.cell_id[m]);
    }
    for b in 0..a.n_cells() {
        for c in 0..a.n_cells() {
            if let Some(v) = a.vcomp(b, c) {
                r.set_vcomp(b, c, v);
            }
            if let Some(h) = a.hcomp(c, b) {
                r.set_hcomp(b, c, h);
            }
        }
    }
    r
}

/// The horizontal opposite of a double category.
pub fn hop_dblcat(d: &FinDblCat) -> FinDblCat {
    let mut r = FinDblCat::new(format!("hop({})", d.name));
    for o in &d.objects {
        r.add_object(o.clone());
    }
    for m in 0..d.n_hm() {
        r.add_hm(d.hm_label(m), d.hm_tgt[m], d.hm_src[m]);
    }
    for o in 0..d.n_objects() {
        r.set_hm_identity(o, d.hm_id[o]);
    }
    for g in 0..d.n_hm() {
        for f in 0..d.n_hm() {
            if let Some(h) = d.hm_compose(f, g) {
                r.set_hm_compose(g, f, h);
            }
        }
    }
    for m in 0..d.n_vm() {
        r.add_vm(d.vm_label(m), d.vm_src[m], d.vm_tgt[m]);
    }
    for o in 0..d.n_objects() {
        r.set_vm_identity(o, d.vm_id[o]);
    }
    for g in 0..d.n_vm() {
        for f in 0..d.n_vm() {
            if let Some(h) = d.vm_compose(g, f) {
                r.set_vm_compose(g, f, h);
            }
        }
    }
    for s in 0..d.n_sq() {
        r.add_sq(
            d.sq_label(s),
            Boundary {
                top: d.sq_top[s],
                bottom: d.sq_bottom[s],
                left: d.sq_right[s],
                right: d.sq_left[s],
            },
        );
    }
    for u in 0..d.n_vm() {
        r.set_sq_hid(u, d.sq_hid[u]);
    }
    for m in 0..d.n_hm() {
        r.set_sq_vid(m, d.sq_vid[m]);
    }
    for b in 0..d.n_sq() {
        for c in 0..d.n_sq() {
            if let Some(h) = d.sq_hcomp(c, b) {
                r.set_sq_hcomp(b, c, h);
            }
            if let Some(v) = d.sq_vcomp(b, c) {
                r.set_sq_vcomp(b, c, v);
            }
        }
    }
    r
}

pub fn pair_id(i: usize, j: usize, nj: usize) -> usize {
    i * nj + j
}

/// Componentwise product of two 2-categories; all ids are row-major pairs.
pub fn product_2(a: &Fin2Cat, b: &Fin2Cat) -> Fin2Cat {
    let mut r = Fin2Cat::new(format!("({}x{})", a.name, b.name));
    for i in 0..a.n_objects() {
        for j in 0..b.n_objects() {
            r.add_object(format!("({},{})", a.objects[i], b.objects[j]));
        }
    }
    for i in 0..a.n_mor() {
        for j in 0..b.n_mor() {
            r.add_mor(
                format!("({},{})", a.mor_label(i), b.mor_label(j)),
                pair_id(a.mor_src[i], b.mor_src[j], b.n_objects()),
                pair_id(a.mor_tgt[i], b.mor_tgt[j], b.n_objects()),
            );
        }
    }
    for i in 0..a.n_objects() {
        for j in 0..b.n_objects() {
            r.set_mor_identity(
                pair_id(i, j, b.n_objects()),
                pair_id(a.mor_id[i], b.mor_id[j], b.n_mor()),
            );
        }
    }
    for gi in 0..a.n_mor() {
        for gj in 0..b.n_mor() {
            for fi in 0..a.n_mor() {
                for fj in 0..b.n_mor() {
                    if let (Some(hi), Some(hj)) = (a.compose_mor(gi, fi), b.compose_mor(gj, fj)) {
                        r.set_mor_compose(
                            pair_id(gi, gj, b.n_mor()),
                            pair_id(fi, fj, b.n_mor()),
                            pair_id(hi, hj, b.n_mor()),
                        );
                    }
                }
            }
        }
    }
    for i in 0..a.n_cells() {
        for j in 0..b.n_cells() {
            r.add_cell(
                format!("({},{})", a.cell_label(i), b.cell_label(j)),
                pair_id(a.cell_src[i], b.cell_src[j], b.n_mor()),
                pair_id(a.cell_tgt[i], b.cell_tgt[j], b.n_mor()),
            );
        }
    }
    for i in 0..a.n_mor() {
        for j in 0..b.n_mor() {
            r.set_cell_identity(
                pair_id(i, j, b.n_mor()),
                pair_id(a.cell_id[i], b.cell_id[j], b.n_cells()),
            );
        }
    }
    for gi in 0..a.n_cells() {
        for gj in 0..b.n_cells() {
            for fi in 0..a.n_cells() {
                for fj in 0..b.n_cells() {
                    let g = pair_id(gi, gj, b.n_cells());
                    let f = pair_id(fi, fj, b.n_cells());
                    if let (Some(hi), Some(hj)) = (a.vcomp(gi, fi), b.vcomp(gj, fj)) {
                        r.set_vcomp(g, f, pair_id(hi, hj, b.n_cells()));
                    }
                    if let (Some(hi), Some(hj)) = (a.hcomp(gi, fi), b.hcomp(gj, fj)) {
                        r.set_hcomp(g, f, pair_id(hi, hj, b.n_cells()));
                    }
                }
            }
        }
    }
    r
}

/// Componentwise product of two double categories; all ids are row-major pairs.
pub fn product_dbl(a: &FinDblCat, b: &FinDblCat) -> FinDblCat {
    let mut r = FinDblCat::new(format!("({}x{})", a.name, b.name));
    for i in 0..a.n_objects() {
        for j in 0..b.n_objects() {
            r.add_object(format!("({},{})", a.objects[i], b.objects[j]));
        }
    }
    for i in 0..a.n_hm() {
        for j in 0..b.n_hm() {
            r.add_hm(
                format!("({},{})", a.hm_label(i), b.hm_label(j)),
                pair_id(a.hm_src[i], b.hm_src[j], b.n_objects()),
                pair_id(a.hm_tgt[i], b.hm_tgt[j], b.n_objects()),
            );
        }
    }
    for i in 0..a.n_vm() {
        for j in 0..b.n_vm() {
            r.add_vm(
                format!("({},{})", a.vm_label(i), b.vm_label(j)),
                pair_id(a.vm_src[i], b.vm_src[j], b.n_objects()),
                pair_id(a.vm_tgt[i], b.vm_tgt[j], b.n_objects()),
            );
        }
    }
    for i in 0..a.n_objects() {
        for j in 0..b.n_objects() {
            let o = pair_id(i, j, b.n_objects());
            r.set_hm_identity(o, pair_id(a.hm_id[i], b.hm_id[j], b.n_hm()));
            r.set_vm_identity(o, pair_id(a.vm_id[i], b.vm_id[j], b.n_vm()));
        }
    }
    for gi in 0..a.n_hm() {
        for gj in 0..b.n_hm() {
            for fi in 0..a.n_hm() {
                for fj in 0..b.n_hm() {
                    if let (Some(hi), Some(hj)) = (a.hm_compose(gi, fi), b.hm_compose(gj, fj)) {
                        r.set_hm_compose(
                            pair_id(gi, gj, b.n_hm()),
                            pair_id(fi, fj, b.n_hm()),
                            pair_id(hi, hj, b.n_hm()),
                        );
                    }
                }
            }
        }
    }
    for gi in 0..a.n_vm() {
        for gj in 0..b.n_vm() {
            for fi in 0..a.n_vm() {
                for fj in 0..b.n_vm() {
                    if let (Some(hi), Some(hj)) = (a.vm_compose(gi, fi), b.vm_compose(gj, fj)) {
                        r.set_vm_compose(
                            pair_id(gi, gj, b.n_vm()),
                            pair_id(fi, fj, b.n_vm()),
                            pair_id(hi, hj, b.n_vm()),
                        );
                    }
                }
            }
        }
    }
    for i in 0..a.n_sq() {
        for j in 0..b.n_sq() {
            r.add_sq(
                format!("({},{})", a.sq_label(i), b.sq_label(j)),
                Boundary {
                    top: pair_id(a.sq_top[i], b.sq_top[j], b.n_hm()),
                    bottom: pair_id(a.sq_bottom[i], b.sq_bottom[j], b.n_hm()),
                    left: pair_id(a.sq_left[i], b.sq_left[j], b.n_vm()),
                    right: pair_id(a.sq_right[i], b.sq_right[j], b.n_vm()),
                },
            );
        }
    }
    for i in 0..a.n_vm() {
        for j in 0..b.n_vm() {
            r.set_sq_hid(pair_id(i, j, b.n_vm()), pair_id(a.sq_hid[i], b.sq_hid[j], b.n_sq()));
        }
    }
    for i in 0..a.n_hm() {
        for j in 0..b.n_hm() {
            r.set_sq_vid(pair_id(i, j, b.n_hm()), pair_id(a.sq_vid[i], b.sq_vid[j], b.n_sq()));
        }
    }
    for gi in 0..a.n_sq() {
        for gj in 0..b.n_sq() {
            for fi in 0..a.n_sq() {
                for fj in 0..b.n_sq() {
                    let g = pair_id(gi, gj, b.n_sq());
                    let f = pair_id(fi, fj, b.n_sq());
                    if let (Some(hi), Some(hj)) = (a.sq_hcomp(gi, fi), b.sq_hcomp(gj, fj)) {
                        r.set_sq_hcomp(g, f, pair_id(hi, hj, b.n_sq()));
                    }
                    if let (Some(hi), Some(hj)) = (a.sq_vcomp(gi, fi), b.sq_vcomp(gj, fj)) {
                        r.set_sq_vcomp(g, f, pair_id(hi, hj, b.n_sq()));
                    }
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl_cat::validate_fin_dblcat;
    use crate::fixtures;
    use crate::two_cat::validate_fin_2cat;

    fn all_fixture_2cats() -> Vec<Fin2Cat> {
        vec![
            fixtures::term_2cat(),
            fixtures::arr(),
            fixtures::cell(),
            fixtures::icell(),
            fixtures::iso_2cat(),
        ]
    }

    #[test]
    fn unit_of_adjunction_is_identity() {
        // H(HH(A)) is componentwise equal to A for every fixture A.
        for a in all_fixture_2cats() {
            let h = underlying_h(&hh_embed(&a));
            assert!(h.two_cat.tables_eq(&a), "{}", a.name);
        }
    }

    #[test]
    fn vertical_of_embedding_is_arrow_shift() {
        // V(HH(A)) is componentwise equal to Ar*(A).
        for a in all_fixture_2cats() {
            let v = vertical_2cat(&hh_embed(&a));
            let s = ar_star(&a);
            assert!(v.two_cat.tables_eq(&s.two_cat), "{}", a.name);
        }
    }

    #[test]
    fn constructions_preserve_validity() {
        for a in all_fixture_2cats() {
            let d = hh_embed(&a);
            assert!(validate_fin_dblcat(&d).unwrap().ok(), "HH({})", a.name);
            assert!(validate_fin_2cat(&ar_star(&a).two_cat).unwrap().ok(), "Ar*({})", a.name);
            assert!(validate_fin_2cat(&op_2cat(&a)).unwrap().ok(), "op({})", a.name);
        }
        for d in [fixtures::varr(), fixtures::sq_dbl(), fixtures::free_vh()] {
            assert!(validate_fin_2cat(&underlying_h(&d).two_cat).unwrap().ok());
            assert!(validate_fin_2cat(&vertical_2cat(&d).two_cat).unwrap().ok());
            assert!(validate_fin_dblcat(&hop_dblcat(&d)).unwrap().ok());
        }
    }

    #[test]
    fn opposites_are_involutions() {
        for a in all_fixture_2cats() {
            assert!(op_2cat(&op_2cat(&a)).tables_eq(&a));
        }
        for d in [fixtures::varr(), fixtures::sq_dbl(), hh_embed(&fixtures::cell())] {
            assert!(hop_dblcat(&hop_dblcat(&d)).tables_eq(&d));
        }
        // VARR has no non-identity horizontal morphisms.
        assert!(hop_dblcat(&fixtures::varr()).tables_eq(&fixtures::varr()));
    }

    #[test]
    fn duality_exchanges_h_and_v() {
        for d in [fixtures::varr(), fixtures::sq_dbl(), fixtures::free_vh(), hh_embed(&fixtures::cell())]
        {
            let hop = hop_dblcat(&d);
            assert!(underlying_h(&hop).two_cat.tables_eq(&op_2cat(&underlying_h(&d).two_cat)));
            assert!(vertical_2cat(&hop).two_cat.tables_eq(&op_2cat(&vertical_2cat(&d).two_cat)));
        }
    }

    #[test]
    fn hh_shapes() {
        let harr = hh_embed(&fixtures::arr());
        assert_eq!(harr.n_objects(), 2);
        assert_eq!(harr.n_hm(), 3);
        assert_eq!(harr.n_vm(), 2);
        assert_eq!(harr.n_sq(), 3);
        let hterm = hh_embed(&fixtures::term_2cat());
        assert_eq!((hterm.n_objects(), hterm.n_hm(), hterm.n_vm(), hterm.n_sq()), (1, 1, 1, 1));
        // One square per 2-cell of the walking 2-cell: four identities plus
        // the generator.
        let hcell = hh_embed(&fixtures::cell());
        assert_eq!(hcell.n_sq(), 5);
    }

    #[test]
    fn vertical_of_varr_is_discrete() {
        let v = vertical_2cat(&fixtures::varr());
        assert_eq!(v.two_cat.n_objects(), 3);
        assert_eq!(v.two_cat.n_mor(), 3);
        // Only identity squares, so only identity morphisms and 2-cells.
        for m in 0..v.two_cat.n_mor() {
            assert!(v.two_cat.mor_id.contains(&m));
        }
    }

    #[test]
    fn underlying_h_of_varr_is_discrete() {
        let h = underlying_h(&fixtures::varr());
        assert_eq!(h.two_cat.n_objects(), 2);
        assert_eq!(h.two_cat.n_mor(), 2);
        assert_eq!(h.two_cat.n_cells(), 2);
    }

    #[test]
    fn underlying_h_of_free_square() {
        // Only the vertical-boundary-trivial squares survive: the four corner
        // identities and the two edge identity squares.
        let h = underlying_h(&fixtures::sq_dbl());
        assert_eq!(h.two_cat.n_objects(), 4);
        assert_eq!(h.two_cat.n_mor(), 6);
        assert_eq!(h.two_cat.n_cells(), 6);
    }

    #[test]
    fn products_validate() {
        let p2 = product_2(&fixtures::arr(), &fixtures::cell());
        assert!(validate_fin_2cat(&p2).unwrap().ok());
        let pd = product_dbl(&fixtures::varr(), &hh_embed(&fixtures::arr()));
        assert!(validate_fin_dblcat(&pd).unwrap().ok());
    }

    #[test]
    fn map_actions_validate() {
        use crate::maps::{validate_pseudofunctor2, validate_ps_dbl_functor};
        let f = fixtures::collapse_cell_to_arr();
        let src_d = Arc::new(hh_embed(&f.src));
        let tgt_d = Arc::new(hh_embed(&f.tgt));
        let df = hh_embed_map(&f, src_d.clone(), tgt_d.clone());
        assert!(validate_ps_dbl_functor(&df).unwrap().ok());

        let hs = underlying_h(&src_d);
        let ht = underlying_h(&tgt_d);
        let hf = underlying_h_map(&df, &hs, &ht);
        assert!(validate_pseudofunctor2(&hf).unwrap().ok());
        // H(HH(f)) is f again.
        assert_eq!(hf.obj_map, f.obj_map);
        assert_eq!(hf.mor_map, f.mor_map);
        assert_eq!(hf.cell_map, f.cell_map);

        let vs = vertical_2cat(&src_d);
        let vt = vertical_2cat(&tgt_d);
        let vf = vertical_2cat_map(&df, &vs, &vt);
        assert!(validate_pseudofunctor2(&vf).unwrap().ok());

        let ss = ar_star(&f.src);
        let st = ar_star(&f.tgt);
        let sf = ar_star_map(&f, &ss, &st);
        assert!(validate_pseudofunctor2(&sf).unwrap().ok());
        // V(HH(f)) equals Ar*(f) componentwise.
        assert_eq!(vf.obj_map, sf.obj_map);
        assert_eq!(vf.mor_map, sf.mor_map);
        assert_eq!(vf.cell_map, sf.cell_map);
    }
}
