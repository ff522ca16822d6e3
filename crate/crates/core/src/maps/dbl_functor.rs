//! Normal pseudo-double functors: strict in the vertical direction,
//! pseudo in the horizontal one.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cat::ObjId;
use crate::dbl_cat::{Boundary, FinDblCat, HmId, SqId, VmId};
use crate::error::{Error, Result};
use crate::report::Report;

/// A normal pseudo-double functor.
///
/// `compositor(a, a2)` is the vertically invertible square from
/// `(F a2).(F a)` (top) to `F(a2.a)` (bottom), with identity vertical sides,
/// for each composable pair of horizontal morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsDblFunctor {
    pub name: String,
    pub src: Arc<FinDblCat>,
    pub tgt: Arc<FinDblCat>,
    pub obj_map: Vec<ObjId>,
    pub hm_map: Vec<HmId>,
    pub vm_map: Vec<VmId>,
    pub sq_map: Vec<SqId>,
    pub compositors: BTreeMap<(HmId, HmId), SqId>,
}

impl PsDblFunctor {
    pub fn identity(d: Arc<FinDblCat>) -> Self {
        let mut f = PsDblFunctor {
            name: format!("id_{}", d.name),
            obj_map: (0..d.n_objects()).collect(),
            hm_map: (0..d.n_hm()).collect(),
            vm_map: (0..d.n_vm()).collect(),
            sq_map: (0..d.n_sq()).collect(),
            src: d.clone(),
            tgt: d,
            compositors: BTreeMap::new(),
        };
        f.fill_strict_compositors();
        f
    }

    pub fn strict(
        name: impl Into<String>,
        src: Arc<FinDblCat>,
        tgt: Arc<FinDblCat>,
        obj_map: Vec<ObjId>,
        hm_map: Vec<HmId>,
        vm_map: Vec<VmId>,
        sq_map: Vec<SqId>,
    ) -> Self {
        let mut f = PsDblFunctor {
            name: name.into(),
            src,
            tgt,
            obj_map,
            hm_map,
            vm_map,
            sq_map,
            compositors: BTreeMap::new(),
        };
        f.fill_strict_compositors();
        f
    }

    fn fill_strict_compositors(&mut self) {
        for a2 in 0..self.src.n_hm() {
            for a in 0..self.src.n_hm() {
                if self.src.hm_composable(a2, a) {
                    let img = self
                        .tgt
                        .hm_compose(self.hm_map[a2], self.hm_map[a])
                        .expect("strict image composes");
                    self.compositors.insert((a, a2), self.tgt.sq_vid[img]);
                }
            }
        }
    }

    pub fn compositor(&self, a: HmId, a2: HmId) -> Option<SqId> {
        self.compositors.get(&(a, a2)).copied()
    }

    pub fn is_strict(&self) -> bool {
        self.compositors.iter().all(|(&(a, a2), &s)| {
            self.tgt
                .hm_compose(self.hm_map[a2], self.hm_map[a])
                .map(|m| self.tgt.sq_vid[m] == s)
                .unwrap_or(false)
        })
    }

    pub fn compose_strict(g: &PsDblFunctor, f: &PsDblFunctor) -> PsDblFunctor {
        PsDblFunctor::strict(
            format!("{}.{}", g.name, f.name),
            f.src.clone(),
            g.tgt.clone(),
            f.obj_map.iter().map(|&o| g.obj_map[o]).collect(),
            f.hm_map.iter().map(|&m| g.hm_map[m]).collect(),
            f.vm_map.iter().map(|&m| g.vm_map[m]).collect(),
            f.sq_map.iter().map(|&s| g.sq_map[s]).collect(),
        )
    }
}

/// Exhaustively check the axioms of a normal pseudo-double functor.
pub fn validate_ps_dbl_functor(f: &PsDblFunctor) -> Result<Report> {
    let (a, b) = (&*f.src, &*f.tgt);
    if f.obj_map.len() != a.n_objects()
        || f.hm_map.len() != a.n_hm()
        || f.vm_map.len() != a.n_vm()
        || f.sq_map.len() != a.n_sq()
    {
        return Err(Error::SortMismatch(format!("map table sizes for {}", f.name)));
    }
    if f.obj_map.iter().any(|&o| o >= b.n_objects())
        || f.hm_map.iter().any(|&m| m >= b.n_hm())
        || f.vm_map.iter().any(|&m| m >= b.n_vm())
        || f.sq_map.iter().any(|&s| s >= b.n_sq())
        || f.compositors.values().any(|&s| s >= b.n_sq())
    {
        return Err(Error::MalformedTable {
            structure: f.name.clone(),
            detail: "map references unknown target id".into(),
        });
    }
    let mut report = Report::new();

    for m in 0..a.n_hm() {
        let fm = f.hm_map[m];
        if b.hm_src[fm] != f.obj_map[a.hm_src[m]] || b.hm_tgt[fm] != f.obj_map[a.hm_tgt[m]] {
            report.violate("hmor boundary", vec![a.hm_label(m)]);
        }
    }
    for m in 0..a.n_vm() {
        let fm = f.vm_map[m];
        if b.vm_src[fm] != f.obj_map[a.vm_src[m]] || b.vm_tgt[fm] != f.obj_map[a.vm_tgt[m]] {
            report.violate("vmor boundary", vec![a.vm_label(m)]);
        }
    }
    for s in 0..a.n_sq() {
        let fs = f.sq_map[s];
        let want = Boundary {
            top: f.hm_map[a.sq_top[s]],
            bottom: f.hm_map[a.sq_bottom[s]],
            left: f.vm_map[a.sq_left[s]],
            right: f.vm_map[a.sq_right[s]],
        };
        if b.boundary(fs) != want {
            report.violate("square boundary", vec![a.sq_label(s)]);
        }
    }

    // Vertical structure and vertical identities preserved strictly.
    for o in 0..a.n_objects() {
        if f.vm_map[a.vm_id[o]] != b.vm_id[f.obj_map[o]] {
            report.violate("vertical identity", vec![a.objects[o].clone()]);
        }
    }
    for g in 0..a.n_vm() {
        for h in 0..a.n_vm() {
            if let Some(gh) = a.vm_compose(g, h) {
                if b.vm_compose(f.vm_map[g], f.vm_map[h]) != Some(f.vm_map[gh]) {
                    report.violate("vertical functoriality", vec![a.vm_label(g), a.vm_label(h)]);
                }
            }
        }
    }
    for x in 0..a.n_sq() {
        for y in 0..a.n_sq() {
            if let Some(xy) = a.sq_vcomp(x, y) {
                if b.sq_vcomp(f.sq_map[x], f.sq_map[y]) != Some(f.sq_map[xy]) {
                    report.violate("square vertical functoriality", vec![a.sq_label(x), a.sq_label(y)]);
                }
            }
        }
    }
    for m in 0..a.n_hm() {
        if f.sq_map[a.sq_vid[m]] != b.sq_vid[f.hm_map[m]] {
            report.violate("vid square preserved", vec![a.hm_label(m)]);
        }
    }

    // Normality: horizontal identities and their unit squares on the nose.
    for o in 0..a.n_objects() {
        if f.hm_map[a.hm_id[o]] != b.hm_id[f.obj_map[o]] {
            report.violate("normality", vec![a.objects[o].clone()]);
        }
    }
    for u in 0..a.n_vm() {
        if f.sq_map[a.sq_hid[u]] != b.sq_hid[f.vm_map[u]] {
            report.violate("hid square preserved", vec![a.vm_label(u)]);
        }
    }

    // Compositors: presence, boundary, vertical invertibility, unitality.
    for a2 in 0..a.n_hm() {
        for a1 in 0..a.n_hm() {
            if !a.hm_composable(a2, a1) {
                continue;
            }
            let Some(phi) = f.compositor(a1, a2) else {
                report.violate("compositor missing", vec![a.hm_label(a1), a.hm_label(a2)]);
                continue;
            };
            let top = b.hm_compose(f.hm_map[a2], f.hm_map[a1]);
            let bottom = a.hm_compose(a2, a1).map(|m| f.hm_map[m]);
            let src_obj = f.obj_map[a.hm_src[a1]];
            let tgt_obj = f.obj_map[a.hm_tgt[a2]];
            let ok = top == Some(b.sq_top[phi])
                && bottom == Some(b.sq_bottom[phi])
                && b.sq_left[phi] == b.vm_id[src_obj]
                && b.sq_right[phi] == b.vm_id[tgt_obj];
            if !ok {
                report.violate("compositor boundary", vec![a.hm_label(a1), a.hm_label(a2)]);
                continue;
            }
            if !b.sq_vertically_invertible(phi) {
                report.violate("compositor invertible", vec![a.hm_label(a1), a.hm_label(a2)]);
            }
            if a1 == a.hm_id[a.hm_src[a1]] || a2 == a.hm_id[a.hm_tgt[a2]] {
                if phi != b.sq_vid[b.sq_top[phi]] {
                    report.violate("compositor unitality", vec![a.hm_label(a1), a.hm_label(a2)]);
                }
            }
        }
    }

    // Compositors natural with respect to squares.
    for x in 0..a.n_sq() {
        for y in 0..a.n_sq() {
            if !a.sq_hcomposable(y, x) {
                continue;
            }
            let (a1, c1) = (a.sq_top[x], a.sq_bottom[x]);
            let (a2, c2) = (a.sq_top[y], a.sq_bottom[y]);
            let (Some(p_top), Some(p_bot)) = (f.compositor(a1, a2), f.compositor(c1, c2)) else {
                continue;
            };
            let lhs = b
                .sq_hcomp(f.sq_map[y], f.sq_map[x])
                .and_then(|h| b.sq_vcomp(p_bot, h));
            let rhs = a.sq_hcomp(y, x).and_then(|h| b.sq_vcomp(f.sq_map[h], p_top));
            if lhs != rhs || lhs.is_none() {
                report.violate("compositor naturality", vec![a.sq_label(x), a.sq_label(y)]);
            }
        }
    }

    // Associativity of compositors.
    for a1 in 0..a.n_hm() {
        for a2 in 0..a.n_hm() {
            if !a.hm_composable(a2, a1) {
                continue;
            }
            for a3 in 0..a.n_hm() {
                if !a.hm_composable(a3, a2) {
                    continue;
                }
                let a21 = a.hm_compose(a2, a1).unwrap();
                let a32 = a.hm_compose(a3, a2).unwrap();
                let (Some(p12), Some(p123), Some(p23), Some(p1_23)) = (
                    f.compositor(a1, a2),
                    f.compositor(a21, a3),
                    f.compositor(a2, a3),
                    f.compositor(a1, a32),
                ) else {
                    continue;
                };
                let vid_fa3 = b.sq_vid[f.hm_map[a3]];
                let vid_fa1 = b.sq_vid[f.hm_map[a1]];
                let lhs = b.sq_hcomp(vid_fa3, p12).and_then(|w| b.sq_vcomp(p123, w));
                let rhs = b.sq_hcomp(p23, vid_fa1).and_then(|w| b.sq_vcomp(p1_23, w));
                if lhs != rhs || lhs.is_none() {
                    report.violate(
                        "compositor associativity",
                        vec![a.hm_label(a1), a.hm_label(a2), a.hm_label(a3)],
                    );
                }
            }
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{hh_embed, hh_embed_map};
    use crate::fixtures;

    #[test]
    fn identity_on_varr_validates() {
        let varr = Arc::new(fixtures::varr());
        let f = PsDblFunctor::identity(varr);
        assert!(validate_ps_dbl_functor(&f).unwrap().ok());
        assert!(f.is_strict());
    }

    #[test]
    fn hh_of_collapse_validates() {
        // The horizontal embedding of the CELL -> ARR collapse functor is a
        // normal pseudo-double functor by construction.
        let f = fixtures::collapse_cell_to_arr();
        let df = hh_embed_map(&f, Arc::new(hh_embed(&f.src)), Arc::new(hh_embed(&f.tgt)));
        let report = validate_ps_dbl_functor(&df).unwrap();
        assert!(report.ok(), "{report}");
    }
}
