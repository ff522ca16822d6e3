//! Pseudo-comma and pseudo-slice constructions, realized explicitly from
//! their sort descriptions rather than via pullbacks of hom-objects, with
//! strict projection functors.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cat::{MorId, ObjId};
use crate::constructions::{
    pair_id, product_2, product_dbl, underlying_h, underlying_h_map, vertical_2cat,
    vertical_2cat_map,
};
use crate::dbl_cat::{Boundary, FinDblCat, HmId, SqId, VmId};
use crate::error::{Caps, Error, Result};
use crate::maps::{PsDblFunctor, PseudoFunctor2};
use crate::report::Report;
use crate::sort_map::{assert_isomorphism_2cat, SortMap};
use crate::two_cat::{CellId, Fin2Cat};

/// A pseudo-comma double category over a cospan `G: C -> A <- B: F`, with
/// decode keys for every sort and the strict projection to `C x B`.
///
/// Sort keys:
/// - object: `(C-object, B-object, horizontal f: GC -> FB in A)`;
/// - hmor: `(src, tgt, c, b, psi)` with `psi` a vertically invertible
///   globular square `f'.Gc => Fb.f` in `A`;
/// - vmor: `(src, tgt, u, v, gamma)` with `gamma: top f, bottom g, left Gu,
///   right Fv`;
/// - square: `(top, bottom, left, right, sigma, beta)` subject to the pasting
///   compatibility.
#[derive(Debug, Clone)]
pub struct CommaDbl {
    pub comma: Arc<FinDblCat>,
    pub obj_key: Vec<(ObjId, ObjId, HmId)>,
    pub hm_key: Vec<(usize, usize, HmId, HmId, SqId)>,
    pub vm_key: Vec<(usize, usize, VmId, VmId, SqId)>,
    pub sq_key: Vec<(usize, usize, usize, usize, SqId, SqId)>,
    pub obj_index: BTreeMap<(ObjId, ObjId, HmId), usize>,
    pub hm_index: BTreeMap<(usize, usize, HmId, HmId, SqId), usize>,
    pub vm_index: BTreeMap<(usize, usize, VmId, VmId, SqId), usize>,
    pub sq_index: BTreeMap<(usize, usize, usize, usize, SqId, SqId), usize>,
    pub codomain: Arc<FinDblCat>,
    pub projection: PsDblFunctor,
}

/// The pseudo-comma double category of a cospan of normal pseudo-double
/// functors, unfolded to its explicit sorts.
pub fn comma_dbl(g: &PsDblFunctor, f: &PsDblFunctor, caps: Caps) -> Result<CommaDbl> {
    if !g.tgt.tables_eq(&f.tgt) {
        return Err(Error::SortMismatch("comma legs have different codomains".into()));
    }
    let a = &*g.tgt;
    let (cc, bb) = (&*g.src, &*f.src);
    let name = format!("({}/{})", g.name, f.name);
    let mut k = FinDblCat::new(name.clone());

    let mut obj_key = Vec::new();
    let mut obj_index = BTreeMap::new();
    for co in 0..cc.n_objects() {
        for bo in 0..bb.n_objects() {
            for fm in a.hms_between(g.obj_map[co], f.obj_map[bo]) {
                let key = (co, bo, fm);
                obj_index.insert(key, obj_key.len());
                obj_key.push(key);
                k.add_object(format!(
                    "({},{},{})",
                    cc.objects[co],
                    bb.objects[bo],
                    a.hm_label(fm)
                ));
            }
        }
    }
    caps.check_sort(&format!("objects of {name}"), obj_key.len())?;

    let mut hm_key = Vec::new();
    let mut hm_index = BTreeMap::new();
    for (src, &(co, bo, fm)) in obj_key.iter().enumerate() {
        for (tgt, &(co2, bo2, fm2)) in obj_key.iter().enumerate() {
            for c in cc.hms_between(co, co2) {
                for b in bb.hms_between(bo, bo2) {
                    let top = a.hm_compose(fm2, g.hm_map[c]).expect("composable");
                    let bottom = a.hm_compose(f.hm_map[b], fm).expect("composable");
                    for psi in globular(a, top, bottom) {
                        if !a.sq_vertically_invertible(psi) {
                            continue;
                        }
                        let key = (src, tgt, c, b, psi);
                        hm_index.insert(key, hm_key.len());
                        hm_key.push(key);
                        k.add_hm(
                            format!("({},{},{})", cc.hm_label(c), bb.hm_label(b), a.sq_label(psi)),
                            src,
                            tgt,
                        );
                    }
                }
            }
        }
    }
    caps.check_sort(&format!("hmors of {name}"), hm_key.len())?;

    let mut vm_key = Vec::new();
    let mut vm_index = BTreeMap::new();
    for (src, &(co, bo, fm)) in obj_key.iter().enumerate() {
        for (tgt, &(co2, bo2, gm)) in obj_key.iter().enumerate() {
            for u in cc.vms_between(co, co2) {
                for v in bb.vms_between(bo, bo2) {
                    let bd = Boundary {
                        top: fm,
                        bottom: gm,
                        left: g.vm_map[u],
                        right: f.vm_map[v],
                    };
                    if !a.boundary_consistent(bd) {
                        continue;
                    }
                    for gamma in crate::dbl_cat::squares_filling(a, bd).expect("consistent") {
                        let key = (src, tgt, u, v, gamma);
                        vm_index.insert(key, vm_key.len());
                        vm_key.push(key);
                        k.add_vm(
                            format!("({},{},{})", cc.vm_label(u), bb.vm_label(v), a.sq_label(gamma)),
                            src,
                            tgt,
                        );
                    }
                }
            }
        }
    }
    caps.check_sort(&format!("vmors of {name}"), vm_key.len())?;

    // Squares: for each pair (sigma, beta) and each compatible boundary of
    // comma cells, keep the pair when the pasting equality holds in A.
    let mut hm_by_parts: BTreeMap<(HmId, HmId), Vec<usize>> = BTreeMap::new();
    for (i, &(_, _, c, b, _)) in hm_key.iter().enumerate() {
        hm_by_parts.entry((c, b)).or_default().push(i);
    }
    let mut vm_by_parts: BTreeMap<(VmId, VmId), Vec<usize>> = BTreeMap::new();
    for (i, &(_, _, u, v, _)) in vm_key.iter().enumerate() {
        vm_by_parts.entry((u, v)).or_default().push(i);
    }
    let mut sq_key = Vec::new();
    let mut sq_index = BTreeMap::new();
    let empty: Vec<usize> = Vec::new();
    for sigma in 0..cc.n_sq() {
        for beta in 0..bb.n_sq() {
            let tops = hm_by_parts.get(&(cc.sq_top[sigma], bb.sq_top[beta])).unwrap_or(&empty);
            let bots = hm_by_parts.get(&(cc.sq_bottom[sigma], bb.sq_bottom[beta])).unwrap_or(&empty);
            let lefts = vm_by_parts.get(&(cc.sq_left[sigma], bb.sq_left[beta])).unwrap_or(&empty);
            let rights = vm_by_parts.get(&(cc.sq_right[sigma], bb.sq_right[beta])).unwrap_or(&empty);
            for &t in tops {
                for &bt in bots {
                    for &l in lefts {
                        for &r in rights {
                            let (ts, tt, _, _, psi_t) = hm_key[t];
                            let (bs, btg, _, _, psi_b) = hm_key[bt];
                            let (ls, lt, _, _, gam_l) = vm_key[l];
                            let (rs, rt, _, _, gam_r) = vm_key[r];
                            if ts != ls || tt != rs || bs != lt || btg != rt {
                                continue;
                            }
                            let lhs = a
                                .sq_hcomp(f.sq_map[beta], gam_l)
                                .and_then(|row| a.sq_vcomp(row, psi_t));
                            let rhs = a
                                .sq_hcomp(gam_r, g.sq_map[sigma])
                                .and_then(|row| a.sq_vcomp(psi_b, row));
                            if lhs != rhs || lhs.is_none() {
                                continue;
                            }
                            let key = (t, bt, l, r, sigma, beta);
                            sq_index.insert(key, sq_key.len());
                            sq_key.push(key);
                            k.add_sq(
                                format!("({},{})", cc.sq_label(sigma), bb.sq_label(beta)),
                                Boundary { top: t, bottom: bt, left: l, right: r },
                            );
                        }
                    }
                }
            }
        }
    }
    caps.check_sort(&format!("squares of {name}"), sq_key.len())?;

    // Identities.
    for (o, &(co, bo, fm)) in obj_key.iter().enumerate() {
        let hid = hm_index[&(o, o, cc.hm_id[co], bb.hm_id[bo], a.sq_vid[fm])];
        k.set_hm_identity(o, hid);
        let vid = vm_index[&(o, o, cc.vm_id[co], bb.vm_id[bo], a.sq_vid[fm])];
        k.set_vm_identity(o, vid);
    }
    for (i, &(src, tgt, u, v, _)) in vm_key.iter().enumerate() {
        let t = k.hm_id[src];
        let b = k.hm_id[tgt];
        let key = (t, b, i, i, cc.sq_hid[u], bb.sq_hid[v]);
        k.set_sq_hid(i, sq_index[&key]);
    }
    for (i, &(src, tgt, c, b, _)) in hm_key.iter().enumerate() {
        let key = (i, i, k.vm_id[src], k.vm_id[tgt], cc.sq_vid[c], bb.sq_vid[b]);
        k.set_sq_vid(i, sq_index[&key]);
    }

    // Horizontal composition of comma hmors: compose the legs and paste the
    // comparison squares through the compositors of G and F.
    for (i2, &(s2, t2, c2, b2, psi2)) in hm_key.iter().enumerate() {
        for (i1, &(s1, t1, c1, b1, psi1)) in hm_key.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let c = cc.hm_compose(c2, c1).expect("composable");
            let b = bb.hm_compose(b2, b1).expect("composable");
            let fm = obj_key[s1].2;
            let fm2 = obj_key[t2].2;
            let phi_g = g.compositor(c1, c2).expect("compositor");
            let phi_g_inv = a.sq_vertical_inverse(phi_g).expect("compositor invertible");
            let phi_f = f.compositor(b1, b2).expect("compositor");
            let s_start = a.sq_hcomp(a.sq_vid[fm2], phi_g_inv).expect("whisker");
            let s_two = a.sq_hcomp(psi2, a.sq_vid[g.hm_map[c1]]).expect("whisker");
            let s_three = a.sq_hcomp(a.sq_vid[f.hm_map[b2]], psi1).expect("whisker");
            let s_four = a.sq_hcomp(phi_f, a.sq_vid[fm]).expect("whisker");
            let psi = a
                .sq_vcomp(s_two, s_start)
                .and_then(|x| a.sq_vcomp(s_three, x))
                .and_then(|x| a.sq_vcomp(s_four, x))
                .expect("pasting composes");
            k.set_hm_compose(i2, i1, hm_index[&(s1, t2, c, b, psi)]);
        }
    }

    // Vertical composition of comma vmors.
    for (i2, &(s2, t2, u2, v2, gam2)) in vm_key.iter().enumerate() {
        for (i1, &(s1, t1, u1, v1, gam1)) in vm_key.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let u = cc.vm_compose(u2, u1).expect("composable");
            let v = bb.vm_compose(v2, v1).expect("composable");
            let gamma = a.sq_vcomp(gam2, gam1).expect("composable");
            k.set_vm_compose(i2, i1, vm_index[&(s1, t2, u, v, gamma)]);
        }
    }

    // Square compositions are componentwise.
    for (j2, &(t2, b2, l2, _r2, sig2, bet2)) in sq_key.iter().enumerate() {
        for (j1, &(t1, b1, _l1, r1, sig1, bet1)) in sq_key.iter().enumerate() {
            if r1 == l2 {
                let sig = cc.sq_hcomp(sig2, sig1).expect("composable");
                let bet = bb.sq_hcomp(bet2, bet1).expect("composable");
                let top = k.hm_compose(t2, t1).expect("composable");
                let bottom = k.hm_compose(b2, b1).expect("composable");
                let left = sq_key[j1].2;
                let right = sq_key[j2].3;
                k.set_sq_hcomp(j2, j1, sq_index[&(top, bottom, left, right, sig, bet)]);
            }
            if b1 == t2 {
                let sig = cc.sq_vcomp(sig2, sig1).expect("composable");
                let bet = bb.sq_vcomp(bet2, bet1).expect("composable");
                let left = k.vm_compose(l2, sq_key[j1].2).expect("composable");
                let right = k.vm_compose(sq_key[j2].3, r1).expect("composable");
                k.set_sq_vcomp(j2, j1, sq_index[&(t1, b2, left, right, sig, bet)]);
            }
        }
    }

    // Strict projection to the product.
    let codomain = Arc::new(product_dbl(cc, bb));
    let obj_map = obj_key.iter().map(|&(co, bo, _)| pair_id(co, bo, bb.n_objects())).collect();
    let hm_map = hm_key.iter().map(|&(_, _, c, b, _)| pair_id(c, b, bb.n_hm())).collect();
    let vm_map = vm_key.iter().map(|&(_, _, u, v, _)| pair_id(u, v, bb.n_vm())).collect();
    let sq_map = sq_key.iter().map(|&(_, _, _, _, s, b)| pair_id(s, b, bb.n_sq())).collect();
    let comma = Arc::new(k);
    let projection = PsDblFunctor::strict(
        format!("proj_{name}"),
        comma.clone(),
        codomain.clone(),
        obj_map,
        hm_map,
        vm_map,
        sq_map,
    );

    Ok(CommaDbl {
        comma,
        obj_key,
        hm_key,
        vm_key,
        sq_key,
        obj_index,
        hm_index,
        vm_index,
        sq_index,
        codomain,
        projection,
    })
}

fn globular(a: &FinDblCat, top: HmId, bottom: HmId) -> Vec<SqId> {
    let b = Boundary {
        top,
        bottom,
        left: a.vm_id[a.hm_src[top]],
        right: a.vm_id[a.hm_tgt[top]],
    };
    if !a.boundary_consistent(b) {
        return Vec::new();
    }
    crate::dbl_cat::squares_filling(a, b).expect("consistent")
}

/// A pseudo-slice double category `I // F` for an object `I` of the codomain
/// of `F: B -> A`, with the strict projection to `B`.
///
/// Sort keys mirror the explicit description: objects `(B, f: I -> FB)`,
/// hmors `(b, psi)`, vmors `(v, gamma)`, squares `beta`.
#[derive(Debug, Clone)]
pub struct SliceDbl {
    pub slice: Arc<FinDblCat>,
    pub obj_key: Vec<(ObjId, HmId)>,
    pub hm_key: Vec<(usize, usize, HmId, SqId)>,
    pub vm_key: Vec<(usize, usize, VmId, SqId)>,
    pub sq_key: Vec<(usize, usize, usize, usize, SqId)>,
    pub obj_index: BTreeMap<(ObjId, HmId), usize>,
    pub hm_index: BTreeMap<(usize, usize, HmId, SqId), usize>,
    pub vm_index: BTreeMap<(usize, usize, VmId, SqId), usize>,
    pub sq_index: BTreeMap<(usize, usize, usize, usize, SqId), usize>,
    pub projection: PsDblFunctor,
}

/// The pseudo-slice double category under the object `i`.
pub fn slice_dbl(i: ObjId, f: &PsDblFunctor, caps: Caps) -> Result<SliceDbl> {
    let a = &*f.tgt;
    let bb = &*f.src;
    if i >= a.n_objects() {
        return Err(Error::UnknownId { sort: "object", id: i, size: a.n_objects() });
    }
    let name = format!("({}/{})", a.objects[i], f.name);
    let mut k = FinDblCat::new(name.clone());

    let mut obj_key = Vec::new();
    let mut obj_index = BTreeMap::new();
    for bo in 0..bb.n_objects() {
        for fm in a.hms_between(i, f.obj_map[bo]) {
            let key = (bo, fm);
            obj_index.insert(key, obj_key.len());
            obj_key.push(key);
            k.add_object(format!("({},{})", bb.objects[bo], a.hm_label(fm)));
        }
    }
    caps.check_sort(&format!("objects of {name}"), obj_key.len())?;

    let mut hm_key = Vec::new();
    let mut hm_index = BTreeMap::new();
    for (src, &(bo, fm)) in obj_key.iter().enumerate() {
        for (tgt, &(bo2, fm2)) in obj_key.iter().enumerate() {
            for b in bb.hms_between(bo, bo2) {
                let bottom = a.hm_compose(f.hm_map[b], fm).expect("composable");
                for psi in globular(a, fm2, bottom) {
                    if !a.sq_vertically_invertible(psi) {
                        continue;
                    }
                    let key = (src, tgt, b, psi);
                    hm_index.insert(key, hm_key.len());
                    hm_key.push(key);
                    k.add_hm(format!("({},{})", bb.hm_label(b), a.sq_label(psi)), src, tgt);
                }
            }
        }
    }
    caps.check_sort(&format!("hmors of {name}"), hm_key.len())?;

    let mut vm_key = Vec::new();
    let mut vm_index = BTreeMap::new();
    for (src, &(bo, fm)) in obj_key.iter().enumerate() {
        for (tgt, &(bo2, gm)) in obj_key.iter().enumerate() {
            for v in bb.vms_between(bo, bo2) {
                let bd = Boundary { top: fm, bottom: gm, left: a.vm_id[i], right: f.vm_map[v] };
                if !a.boundary_consistent(bd) {
                    continue;
                }
                for gamma in crate::dbl_cat::squares_filling(a, bd).expect("consistent") {
                    let key = (src, tgt, v, gamma);
                    vm_index.insert(key, vm_key.len());
                    vm_key.push(key);
                    k.add_vm(format!("({},{})", bb.vm_label(v), a.sq_label(gamma)), src, tgt);
                }
            }
        }
    }
    caps.check_sort(&format!("vmors of {name}"), vm_key.len())?;

    let mut hm_by_b: BTreeMap<HmId, Vec<usize>> = BTreeMap::new();
    for (idx, &(_, _, b, _)) in hm_key.iter().enumerate() {
        hm_by_b.entry(b).or_default().push(idx);
    }
    let mut vm_by_v: BTreeMap<VmId, Vec<usize>> = BTreeMap::new();
    for (idx, &(_, _, v, _)) in vm_key.iter().enumerate() {
        vm_by_v.entry(v).or_default().push(idx);
    }
    let mut sq_key = Vec::new();
    let mut sq_index = BTreeMap::new();
    let empty: Vec<usize> = Vec::new();
    for beta in 0..bb.n_sq() {
        let tops = hm_by_b.get(&bb.sq_top[beta]).unwrap_or(&empty);
        let bots = hm_by_b.get(&bb.sq_bottom[beta]).unwrap_or(&empty);
        let lefts = vm_by_v.get(&bb.sq_left[beta]).unwrap_or(&empty);
        let rights = vm_by_v.get(&bb.sq_right[beta]).unwrap_or(&empty);
        for &t in tops {
            for &bt in bots {
                for &l in lefts {
                    for &r in rights {
                        let (ts, tt, _, psi_t) = hm_key[t];
                        let (bs, btg, _, psi_b) = hm_key[bt];
                        let (ls, lt, _, gam_l) = vm_key[l];
                        let (rs, rt, _, gam_r) = vm_key[r];
                        if ts != ls || tt != rs || bs != lt || btg != rt {
                            continue;
                        }
                        let lhs = a
                            .sq_hcomp(f.sq_map[beta], gam_l)
                            .and_then(|row| a.sq_vcomp(row, psi_t));
                        let rhs = a.sq_vcomp(psi_b, gam_r);
                        if lhs != rhs || lhs.is_none() {
                            continue;
                        }
                        let key = (t, bt, l, r, beta);
                        sq_index.insert(key, sq_key.len());
                        sq_key.push(key);
                        k.add_sq(
                            bb.sq_label(beta),
                            Boundary { top: t, bottom: bt, left: l, right: r },
                        );
                    }
                }
            }
        }
    }
    caps.check_sort(&format!("squares of {name}"), sq_key.len())?;

    for (o, &(bo, fm)) in obj_key.iter().enumerate() {
        k.set_hm_identity(o, hm_index[&(o, o, bb.hm_id[bo], a.sq_vid[fm])]);
        k.set_vm_identity(o, vm_index[&(o, o, bb.vm_id[bo], a.sq_vid[fm])]);
    }
    for (idx, &(src, tgt, v, _)) in vm_key.iter().enumerate() {
        let key = (k.hm_id[src], k.hm_id[tgt], idx, idx, bb.sq_hid[v]);
        k.set_sq_hid(idx, sq_index[&key]);
    }
    for (idx, &(src, tgt, b, _)) in hm_key.iter().enumerate() {
        let key = (idx, idx, k.vm_id[src], k.vm_id[tgt], bb.sq_vid[b]);
        k.set_sq_vid(idx, sq_index[&key]);
    }

    for (i2, &(s2, t2, b2, psi2)) in hm_key.iter().enumerate() {
        for (i1, &(s1, t1, b1, psi1)) in hm_key.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let b = bb.hm_compose(b2, b1).expect("composable");
            let fm = obj_key[s1].1;
            let phi_f = f.compositor(b1, b2).expect("compositor");
            let s_two = a.sq_hcomp(a.sq_vid[f.hm_map[b2]], psi1).expect("whisker");
            let s_three = a.sq_hcomp(phi_f, a.sq_vid[fm]).expect("whisker");
            let psi = a
                .sq_vcomp(s_two, psi2)
                .and_then(|x| a.sq_vcomp(s_three, x))
                .expect("pasting composes");
            k.set_hm_compose(i2, i1, hm_index[&(s1, t2, b, psi)]);
        }
    }
    for (i2, &(s2, t2, v2, gam2)) in vm_key.iter().enumerate() {
        for (i1, &(s1, t1, v1, gam1)) in vm_key.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let v = bb.vm_compose(v2, v1).expect("composable");
            let gamma = a.sq_vcomp(gam2, gam1).expect("composable");
            k.set_vm_compose(i2, i1, vm_index[&(s1, t2, v, gamma)]);
        }
    }
    for (j2, &(t2, b2, l2, r2, bet2)) in sq_key.iter().enumerate() {
        for (j1, &(t1, b1, l1, r1, bet1)) in sq_key.iter().enumerate() {
            if r1 == l2 {
                let bet = bb.sq_hcomp(bet2, bet1).expect("composable");
                let top = k.hm_compose(t2, t1).expect("composable");
                let bottom = k.hm_compose(b2, b1).expect("composable");
                k.set_sq_hcomp(j2, j1, sq_index[&(top, bottom, l1, r2, bet)]);
            }
            if b1 == t2 {
                let bet = bb.sq_vcomp(bet2, bet1).expect("composable");
                let left = k.vm_compose(l2, l1).expect("composable");
                let right = k.vm_compose(r2, r1).expect("composable");
                k.set_sq_vcomp(j2, j1, sq_index[&(t1, b2, left, right, bet)]);
            }
        }
    }

    let slice = Arc::new(k);
    let projection = PsDblFunctor::strict(
        format!("proj_{name}"),
        slice.clone(),
        f.src.clone(),
        obj_key.iter().map(|&(bo, _)| bo).collect(),
        hm_key.iter().map(|&(_, _, b, _)| b).collect(),
        vm_key.iter().map(|&(_, _, v, _)| v).collect(),
        sq_key.iter().map(|&(_, _, _, _, b)| b).collect(),
    );
    Ok(SliceDbl {
        slice,
        obj_key,
        hm_key,
        vm_key,
        sq_key,
        obj_index,
        hm_index,
        vm_index,
        sq_index,
        projection,
    })
}

/// A pseudo-comma 2-category over a cospan of normal pseudo-functors, with
/// decode keys and the strict projection to the product.
#[derive(Debug, Clone)]
pub struct Comma2 {
    pub comma: Arc<Fin2Cat>,
    pub obj_key: Vec<(ObjId, ObjId, MorId)>,
    pub mor_key: Vec<(usize, usize, MorId, MorId, CellId)>,
    pub cell_key: Vec<(usize, usize, CellId, CellId)>,
    pub obj_index: BTreeMap<(ObjId, ObjId, MorId), usize>,
    pub mor_index: BTreeMap<(usize, usize, MorId, MorId, CellId), usize>,
    pub cell_index: BTreeMap<(usize, usize, CellId, CellId), usize>,
    pub codomain: Arc<Fin2Cat>,
    pub projection: PseudoFunctor2,
}

/// The pseudo-comma 2-category of a cospan of normal pseudo-functors.
pub fn comma_2(g: &PseudoFunctor2, f: &PseudoFunctor2, caps: Caps) -> Result<Comma2> {
    if !g.tgt.tables_eq(&f.tgt) {
        return Err(Error::SortMismatch("comma legs have different codomains".into()));
    }
    let a = &*g.tgt;
    let (cc, bb) = (&*g.src, &*f.src);
    let name = format!("({}/{})", g.name, f.name);
    let mut k = Fin2Cat::new(name.clone());

    let mut obj_key = Vec::new();
    let mut obj_index = BTreeMap::new();
    for co in 0..cc.n_objects() {
        for bo in 0..bb.n_objects() {
            for fm in a.hom_mors(g.obj_map[co], f.obj_map[bo]) {
                let key = (co, bo, fm);
                obj_index.insert(key, obj_key.len());
                obj_key.push(key);
                k.add_object(format!(
                    "({},{},{})",
                    cc.objects[co],
                    bb.objects[bo],
                    a.mor_label(fm)
                ));
            }
        }
    }
    caps.check_sort(&format!("objects of {name}"), obj_key.len())?;

    let mut mor_key = Vec::new();
    let mut mor_index = BTreeMap::new();
    for (src, &(co, bo, fm)) in obj_key.iter().enumerate() {
        for (tgt, &(co2, bo2, fm2)) in obj_key.iter().enumerate() {
            for c in cc.hom_mors(co, co2) {
                for b in bb.hom_mors(bo, bo2) {
                    let top = a.compose_mor(fm2, g.mor_map[c]).expect("composable");
                    let bottom = a.compose_mor(f.mor_map[b], fm).expect("composable");
                    for psi in a.cells_between(top, bottom) {
                        if !a.cell_invertible(psi) {
                            continue;
                        }
                        let key = (src, tgt, c, b, psi);
                        mor_index.insert(key, mor_key.len());
                        mor_key.push(key);
                        k.add_mor(
                            format!("({},{},{})", cc.mor_label(c), bb.mor_label(b), a.cell_label(psi)),
                            src,
                            tgt,
                        );
                    }
                }
            }
        }
    }
    caps.check_sort(&format!("morphisms of {name}"), mor_key.len())?;

    let mut cell_key = Vec::new();
    let mut cell_index = BTreeMap::new();
    for (m1, &(s1, t1, c1, b1, psi1)) in mor_key.iter().enumerate() {
        for (m2, &(s2, t2, c2, b2, psi2)) in mor_key.iter().enumerate() {
            if s1 != s2 || t1 != t2 {
                continue;
            }
            let fm = obj_key[s1].2;
            let fm2 = obj_key[t1].2;
            for sigma in cc.cells_between(c1, c2) {
                for beta in bb.cells_between(b1, b2) {
                    let lhs = a
                        .hcomp(f.cell_map[beta], a.cell_id[fm])
                        .and_then(|w| a.vcomp(w, psi1));
                    let rhs = a
                        .hcomp(a.cell_id[fm2], g.cell_map[sigma])
                        .and_then(|w| a.vcomp(psi2, w));
                    if lhs != rhs || lhs.is_none() {
                        continue;
                    }
                    let key = (m1, m2, sigma, beta);
                    cell_index.insert(key, cell_key.len());
                    cell_key.push(key);
                    k.add_cell(
                        format!("({},{})", cc.cell_label(sigma), bb.cell_label(beta)),
                        m1,
                        m2,
                    );
                }
            }
        }
    }
    caps.check_sort(&format!("2-cells of {name}"), cell_key.len())?;

    for (o, &(co, bo, fm)) in obj_key.iter().enumerate() {
        k.set_mor_identity(o, mor_index[&(o, o, cc.mor_id[co], bb.mor_id[bo], a.cell_id[fm])]);
    }
    for (m, &(_, _, c, b, _)) in mor_key.iter().enumerate() {
        k.set_cell_identity(m, cell_index[&(m, m, cc.cell_id[c], bb.cell_id[b])]);
    }

    for (i2, &(s2, t2, c2, b2, psi2)) in mor_key.iter().enumerate() {
        for (i1, &(s1, t1, c1, b1, psi1)) in mor_key.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let c = cc.compose_mor(c2, c1).expect("composable");
            let b = bb.compose_mor(b2, b1).expect("composable");
            let fm = obj_key[s1].2;
            let fm2 = obj_key[t2].2;
            let phi_g = g.compositor(c1, c2).expect("compositor");
            let phi_g_inv = a.cell_inverse(phi_g).expect("compositor invertible");
            let phi_f = f.compositor(b1, b2).expect("compositor");
            let s_start = a.hcomp(a.cell_id[fm2], phi_g_inv).expect("whisker");
            let s_two = a.hcomp(psi2, a.cell_id[g.mor_map[c1]]).expect("whisker");
            let s_three = a.hcomp(a.cell_id[f.mor_map[b2]], psi1).expect("whisker");
            let s_four = a.hcomp(phi_f, a.cell_id[fm]).expect("whisker");
            let psi = a
                .vcomp(s_two, s_start)
                .and_then(|x| a.vcomp(s_three, x))
                .and_then(|x| a.vcomp(s_four, x))
                .expect("pasting composes");
            k.set_mor_compose(i2, i1, mor_index[&(s1, t2, c, b, psi)]);
        }
    }

    for (j2, &(m21, m22, sig2, bet2)) in cell_key.iter().enumerate() {
        for (j1, &(m11, m12, sig1, bet1)) in cell_key.iter().enumerate() {
            if m12 == m21 {
                let sig = cc.vcomp(sig2, sig1).expect("composable");
                let bet = bb.vcomp(bet2, bet1).expect("composable");
                k.set_vcomp(j2, j1, cell_index[&(m11, m22, sig, bet)]);
            }
            if mor_key[m21].0 == mor_key[m11].1 && mor_key[m22].0 == mor_key[m12].1 {
                if let (Some(sig), Some(bet)) = (cc.hcomp(sig2, sig1), bb.hcomp(bet2, bet1)) {
                    let src = k.compose_mor(m21, m11).expect("composable");
                    let tgt = k.compose_mor(m22, m12).expect("composable");
                    k.set_hcomp(j2, j1, cell_index[&(src, tgt, sig, bet)]);
                }
            }
        }
    }

    let codomain = Arc::new(product_2(cc, bb));
    let obj_map = obj_key.iter().map(|&(co, bo, _)| pair_id(co, bo, bb.n_objects())).collect();
    let mor_map = mor_key.iter().map(|&(_, _, c, b, _)| pair_id(c, b, bb.n_mor())).collect();
    let cell_map = cell_key.iter().map(|&(_, _, s, b)| pair_id(s, b, bb.n_cells())).collect();
    let comma = Arc::new(k);
    let projection = PseudoFunctor2::strict(
        format!("proj_{name}"),
        comma.clone(),
        codomain.clone(),
        obj_map,
        mor_map,
        cell_map,
    );
    Ok(Comma2 {
        comma,
        obj_key,
        mor_key,
        cell_key,
        obj_index,
        mor_index,
        cell_index,
        codomain,
        projection,
    })
}

/// A pseudo-slice 2-category `I // F` with the strict projection to `B`.
#[derive(Debug, Clone)]
pub struct Slice2 {
    pub slice: Arc<Fin2Cat>,
    pub obj_key: Vec<(ObjId, MorId)>,
    pub mor_key: Vec<(usize, usize, MorId, CellId)>,
    pub cell_key: Vec<(usize, usize, CellId)>,
    pub obj_index: BTreeMap<(ObjId, MorId), usize>,
    pub mor_index: BTreeMap<(usize, usize, MorId, CellId), usize>,
    pub cell_index: BTreeMap<(usize, usize, CellId), usize>,
    pub projection: PseudoFunctor2,
}

/// The pseudo-slice 2-category under the object `i`.
pub fn slice_2(i: ObjId, f: &PseudoFunctor2, caps: Caps) -> Result<Slice2> {
    let a = &*f.tgt;
    let bb = &*f.src;
    if i >= a.n_objects() {
        return Err(Error::UnknownId { sort: "object", id: i, size: a.n_objects() });
    }
    let name = format!("({}/{})", a.objects[i], f.name);
    let mut k = Fin2Cat::new(name.clone());

    let mut obj_key = Vec::new();
    let mut obj_index = BTreeMap::new();
    for bo in 0..bb.n_objects() {
        for fm in a.hom_mors(i, f.obj_map[bo]) {
            let key = (bo, fm);
            obj_index.insert(key, obj_key.len());
            obj_key.push(key);
            k.add_object(format!("({},{})", bb.objects[bo], a.mor_label(fm)));
        }
    }
    caps.check_sort(&format!("objects of {name}"), obj_key.len())?;

    let mut mor_key = Vec::new();
    let mut mor_index = BTreeMap::new();
    for (src, &(bo, fm)) in obj_key.iter().enumerate() {
        for (tgt, &(bo2, fm2)) in obj_key.iter().enumerate() {
            for b in bb.hom_mors(bo, bo2) {
                let bottom = a.compose_mor(f.mor_map[b], fm).expect("composable");
                for psi in a.cells_between(fm2, bottom) {
                    if !a.cell_invertible(psi) {
                        continue;
                    }
                    let key = (src, tgt, b, psi);
                    mor_index.insert(key, mor_key.len());
                    mor_key.push(key);
                    k.add_mor(format!("({},{})", bb.mor_label(b), a.cell_label(psi)), src, tgt);
                }
            }
        }
    }
    caps.check_sort(&format!("morphisms of {name}"), mor_key.len())?;

    let mut cell_key = Vec::new();
    let mut cell_index = BTreeMap::new();
    for (m1, &(s1, t1, b1, psi1)) in mor_key.iter().enumerate() {
        for (m2, &(s2, t2, b2, psi2)) in mor_key.iter().enumerate() {
            if s1 != s2 || t1 != t2 {
                continue;
            }
            let fm = obj_key[s1].1;
            for beta in bb.cells_between(b1, b2) {
                let lhs = a.hcomp(f.cell_map[beta], a.cell_id[fm]).and_then(|w| a.vcomp(w, psi1));
                if lhs != Some(psi2) {
                    continue;
                }
                let key = (m1, m2, beta);
                cell_index.insert(key, cell_key.len());
                cell_key.push(key);
                k.add_cell(bb.cell_label(beta), m1, m2);
            }
        }
    }
    caps.check_sort(&format!("2-cells of {name}"), cell_key.len())?;

    for (o, &(bo, fm)) in obj_key.iter().enumerate() {
        k.set_mor_identity(o, mor_index[&(o, o, bb.mor_id[bo], a.cell_id[fm])]);
    }
    for (m, &(_, _, b, _)) in mor_key.iter().enumerate() {
        k.set_cell_identity(m, cell_index[&(m, m, bb.cell_id[b])]);
    }

    for (i2, &(s2, t2, b2, psi2)) in mor_key.iter().enumerate() {
        for (i1, &(s1, t1, b1, psi1)) in mor_key.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let b = bb.compose_mor(b2, b1).expect("composable");
            let fm = obj_key[s1].1;
            let phi_f = f.compositor(b1, b2).expect("compositor");
            let s_two = a.hcomp(a.cell_id[f.mor_map[b2]], psi1).expect("whisker");
            let s_three = a.hcomp(phi_f, a.cell_id[fm]).expect("whisker");
            let psi = a
                .vcomp(s_two, psi2)
                .and_then(|x| a.vcomp(s_three, x))
                .expect("pasting composes");
            k.set_mor_compose(i2, i1, mor_index[&(s1, t2, b, psi)]);
        }
    }

    for (j2, &(m21, m22, bet2)) in cell_key.iter().enumerate() {
        for (j1, &(m11, m12, bet1)) in cell_key.iter().enumerate() {
            if m12 == m21 {
                let bet = bb.vcomp(bet2, bet1).expect("composable");
                k.set_vcomp(j2, j1, cell_index[&(m11, m22, bet)]);
            }
            if mor_key[m21].0 == mor_key[m11].1 && mor_key[m22].0 == mor_key[m12].1 {
                if let Some(bet) = bb.hcomp(bet2, bet1) {
                    let src = k.compose_mor(m21, m11).expect("composable");
                    let tgt = k.compose_mor(m22, m12).expect("composable");
                    k.set_hcomp(j2, j1, cell_index[&(src, tgt, bet)]);
                }
            }
        }
    }

    let slice = Arc::new(k);
    let projection = PseudoFunctor2::strict(
        format!("proj_{name}"),
        slice.clone(),
        f.src.clone(),
        obj_key.iter().map(|&(bo, _)| bo).collect(),
        mor_key.iter().map(|&(_, _, b, _)| b).collect(),
        cell_key.iter().map(|&(_, _, b)| b).collect(),
    );
    Ok(Slice2 {
        slice,
        obj_key,
        mor_key,
        cell_key,
        obj_index,
        mor_index,
        cell_index,
        projection,
    })
}

/// Check that the horizontal and vertical 2-category functors preserve the
/// pseudo-comma of the cospan `(g, f)`: builds both sides of each comparison,
/// constructs the canonical sort maps, and verifies them exhaustively,
/// including commutation with the projections.
pub fn comma_preservation_check(g: &PsDblFunctor, f: &PsDblFunctor, caps: Caps) -> Result<Report> {
    let mut report = Report::new();
    let k = comma_dbl(g, f, caps)?;
    report.absorb("comma valid", crate::dbl_cat::validate_fin_dblcat(&k.comma)?);

    let (cc, bb) = (&g.src, &f.src);
    let hs_c = underlying_h(cc);
    let hs_b = underlying_h(bb);
    let hs_a = underlying_h(&g.tgt);
    let hg = underlying_h_map(g, &hs_c, &hs_a);
    let hf = underlying_h_map(f, &hs_b, &hs_a);
    let hk = underlying_h(&k.comma);
    let target_h = comma_2(&hg, &hf, caps)?;

    // Canonical sort map H(comma(g, f)) -> comma(Hg, Hf).
    let mut m = SortMap::default();
    for &(co, bo, fm) in &k.obj_key {
        m.objects.push(target_h.obj_index[&(co, bo, fm)]);
    }
    for &(src, tgt, c, b, psi) in &k.hm_key {
        let psi2 = hs_a.cell_of_sq[psi].expect("comparison square is globular");
        m.hmor.push(target_h.mor_index[&(m.objects[src], m.objects[tgt], c, b, psi2)]);
    }
    for &s in &hk.sq_of_cell {
        let (t, bt, _, _, sigma, beta) = k.sq_key[s];
        let sig2 = hs_c.cell_of_sq[sigma].expect("globular");
        let bet2 = hs_b.cell_of_sq[beta].expect("globular");
        m.squares.push(target_h.cell_index[&(m.hmor[t], m.hmor[bt], sig2, bet2)]);
    }
    report.absorb(
        "H preserves comma",
        assert_isomorphism_2cat(&hk.two_cat, &target_h.comma, &m)?,
    );
    // Commutation with the projections on objects and morphisms.
    for (o, &img) in m.objects.iter().enumerate() {
        if target_h.projection.obj_map[img] != k.projection.obj_map[o] {
            report.violate("H projection commutes (objects)", vec![o.to_string()]);
        }
    }
    for (h, &img) in m.hmor.iter().enumerate() {
        if target_h.projection.mor_map[img] != k.projection.hm_map[h] {
            report.violate("H projection commutes (morphisms)", vec![h.to_string()]);
        }
    }

    // Vertical side.
    let vs_c = vertical_2cat(cc);
    let vs_b = vertical_2cat(bb);
    let vs_a = vertical_2cat(&g.tgt);
    let vg = vertical_2cat_map(g, &vs_c, &vs_a);
    let vf = vertical_2cat_map(f, &vs_b, &vs_a);
    let vk = vertical_2cat(&k.comma);
    let target_v = comma_2(&vg, &vf, caps)?;

    let mut mv = SortMap::default();
    // Objects of V(comma) are the comma vmors (u, v, gamma).
    for &(_, _, u, v, gamma) in &k.vm_key {
        mv.objects.push(target_v.obj_index[&(u, v, gamma)]);
    }
    // Morphisms of V(comma) are the comma squares.
    let a = &*g.tgt;
    for &(t, bt, l, r, sigma, beta) in &k.sq_key {
        let psi_t = k.hm_key[t].4;
        let psi_b = k.hm_key[bt].4;
        let gam_l = k.vm_key[l].4;
        let gam_r = k.vm_key[r].4;
        let src_mor = a.sq_hcomp(gam_r, g.sq_map[sigma]).expect("composable");
        let tgt_mor = a.sq_hcomp(f.sq_map[beta], gam_l).expect("composable");
        let psi2 = vs_a.cell_index[&(src_mor, tgt_mor, psi_t, psi_b)];
        mv.hmor.push(target_v.mor_index[&(mv.objects[l], mv.objects[r], sigma, beta, psi2)]);
    }
    // 2-cells of V(comma) are coherent pairs of globular comma squares.
    for &(msrc, mtgt, s0, s1) in &vk.cell_keys {
        let (.., sig0, bet0) = k.sq_key[s0];
        let (.., sig1, bet1) = k.sq_key[s1];
        let (.., sig_s, bet_s) = k.sq_key[msrc];
        let (.., sig_t, bet_t) = k.sq_key[mtgt];
        let x = vs_c.cell_index[&(sig_s, sig_t, sig0, sig1)];
        let y = vs_b.cell_index[&(bet_s, bet_t, bet0, bet1)];
        mv.squares.push(target_v.cell_index[&(mv.hmor[msrc], mv.hmor[mtgt], x, y)]);
    }
    report.absorb(
        "V preserves comma",
        assert_isomorphism_2cat(&vk.two_cat, &target_v.comma, &mv)?,
    );
    for (o, &img) in mv.objects.iter().enumerate() {
        let want = pair_id(k.vm_key[o].2, k.vm_key[o].3, f.src.n_vm());
        if target_v.projection.obj_map[img] != want {
            report.violate("V projection commutes (objects)", vec![o.to_string()]);
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::hh_embed;
    use crate::dbl_cat::validate_fin_dblcat;
    use crate::fixtures;
    use crate::two_cat::validate_fin_2cat;

    fn harr() -> Arc<FinDblCat> {
        Arc::new(hh_embed(&fixtures::arr()))
    }

    fn point_functor(d: &Arc<FinDblCat>, o: ObjId) -> PsDblFunctor {
        let term = Arc::new(hh_embed(&fixtures::term_2cat()));
        PsDblFunctor::strict(
            format!("pt_{o}"),
            term,
            d.clone(),
            vec![o],
            vec![d.hm_id[o]],
            vec![d.vm_id[o]],
            vec![d.sq_hid[d.vm_id[o]]],
        )
    }

    #[test]
    fn slice_of_harr_under_zero() {
        let h = harr();
        let id = PsDblFunctor::identity(h.clone());
        let s = slice_dbl(0, &id, Caps::default()).unwrap();
        // Objects (0, id_0) and (1, f); every square unique per boundary.
        assert_eq!(s.obj_key, vec![(0, 0), (1, 2)]);
        assert!(validate_fin_dblcat(&s.slice).unwrap().ok());
        // Independent count from the explicit sort description.
        let a = &*h;
        let mut expected = 0;
        for &(bo, fm) in &s.obj_key {
            for &(_bo2, fm2) in &s.obj_key {
                for b in a.hms_between(bo, _bo2) {
                    let bottom = a.hm_compose(b, fm).unwrap();
                    expected += super::globular(a, fm2, bottom)
                        .into_iter()
                        .filter(|&sq| a.sq_vertically_invertible(sq))
                        .count();
                }
            }
        }
        assert_eq!(s.hm_key.len(), expected);
    }

    #[test]
    fn slice_over_terminal_is_terminal() {
        let t = Arc::new(hh_embed(&fixtures::term_2cat()));
        let id = PsDblFunctor::identity(t);
        let s = slice_dbl(0, &id, Caps::default()).unwrap();
        assert_eq!(
            (s.slice.n_objects(), s.slice.n_hm(), s.slice.n_vm(), s.slice.n_sq()),
            (1, 1, 1, 1)
        );
    }

    #[test]
    fn slice_of_varr_under_zero_has_single_object() {
        let v = Arc::new(fixtures::varr());
        let id = PsDblFunctor::identity(v);
        let s = slice_dbl(0, &id, Caps::default()).unwrap();
        assert_eq!(s.obj_key, vec![(0, 0)]);
        assert!(validate_fin_dblcat(&s.slice).unwrap().ok());
    }

    #[test]
    fn comma_with_point_leg_matches_slice() {
        // comma(pt_0, id) and slice(0, id) over HARR carry the same tables.
        let h = harr();
        let id = PsDblFunctor::identity(h.clone());
        let pt = point_functor(&h, 0);
        let k = comma_dbl(&pt, &id, Caps::default()).unwrap();
        let s = slice_dbl(0, &id, Caps::default()).unwrap();
        assert!(validate_fin_dblcat(&k.comma).unwrap().ok());
        assert!(k.comma.tables_eq(&s.slice));
    }

    #[test]
    fn slice_2_of_arr() {
        let arr = Arc::new(fixtures::arr());
        let id = PseudoFunctor2::identity(arr);
        let s = slice_2(0, &id, Caps::default()).unwrap();
        assert_eq!(s.obj_key, vec![(0, 0), (1, 2)]);
        for x in 0..s.slice.n_objects() {
            for y in 0..s.slice.n_objects() {
                assert!(s.slice.hom_mors(x, y).len() <= 1);
            }
        }
        assert!(validate_fin_2cat(&s.slice).unwrap().ok());
    }

    #[test]
    fn slice_2_of_cell_distinguishes_psi() {
        let cell = Arc::new(fixtures::cell());
        let id = PseudoFunctor2::identity(cell.clone());
        let s = slice_2(0, &id, Caps::default()).unwrap();
        assert!(validate_fin_2cat(&s.slice).unwrap().ok());
        // Morphisms (0,id_0) -> (1,x) are pairs (b, psi) with psi invertible:
        // only the identity 2-cells qualify in CELL.
        let o_f = s.obj_index[&(1, 2)];
        let o_g = s.obj_index[&(1, 3)];
        let o_0 = s.obj_index[&(0, 0)];
        assert_eq!(s.slice.hom_mors(o_0, o_f).len(), 1);
        assert_eq!(s.slice.hom_mors(o_0, o_g).len(), 1);
        // In ICELL the invertible generator doubles the count.
        let icell = Arc::new(fixtures::icell());
        let idi = PseudoFunctor2::identity(icell);
        let si = slice_2(0, &idi, Caps::default()).unwrap();
        assert!(validate_fin_2cat(&si.slice).unwrap().ok());
        let of = si.obj_index[&(1, 2)];
        let o0 = si.obj_index[&(0, 0)];
        assert_eq!(si.slice.hom_mors(o0, of).len(), 2);
    }

    #[test]
    fn slice_2_over_terminal_is_terminal() {
        let t = Arc::new(fixtures::term_2cat());
        let id = PseudoFunctor2::identity(t);
        let s = slice_2(0, &id, Caps::default()).unwrap();
        assert_eq!((s.slice.n_objects(), s.slice.n_mor(), s.slice.n_cells()), (1, 1, 1));
    }

    #[test]
    fn preservation_check_on_harr_slices() {
        let h = harr();
        let id = PsDblFunctor::identity(h.clone());
        let pt = point_functor(&h, 0);
        let report = comma_preservation_check(&pt, &id, Caps::default()).unwrap();
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn preservation_check_over_terminal() {
        let t = Arc::new(hh_embed(&fixtures::term_2cat()));
        let id = PsDblFunctor::identity(t.clone());
        let report = comma_preservation_check(&id, &id, Caps::default()).unwrap();
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn preservation_check_on_collapse() {
        let f = fixtures::collapse_cell_to_arr();
        let src_d = Arc::new(hh_embed(&f.src));
        let tgt_d = Arc::new(hh_embed(&f.tgt));
        let df = crate::constructions::hh_embed_map(&f, src_d, tgt_d.clone());
        let pt = point_functor(&tgt_d, 0);
        let report = comma_preservation_check(&df, &pt, Caps::default()).unwrap();
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn projections_are_strict_and_valid() {
        let h = harr();
        let id = PsDblFunctor::identity(h);
        let s = slice_dbl(0, &id, Caps::default()).unwrap();
        assert!(s.projection.is_strict());
        assert!(crate::maps::validate_ps_dbl_functor(&s.projection).unwrap().ok());
        let cell = Arc::new(fixtures::cell());
        let id2 = PseudoFunctor2::identity(cell);
        let s2 = slice_2(0, &id2, Caps::default()).unwrap();
        assert!(s2.projection.is_strict());
        assert!(crate::maps::validate_pseudofunctor2(&s2.projection).unwrap().ok());
    }
}
