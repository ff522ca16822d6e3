//! Normal pseudo-functors between finite 2-categories.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cat::{MorId, ObjId};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::two_cat::{CellId, Fin2Cat};

/// A normal pseudo-functor between 2-categories.
///
/// Normality means identities of objects are preserved on the nose, so the
/// only comparison data are the compositors: `compositor(a, a2)` is the
/// invertible 2-cell `(F a2).(F a) => F(a2.a)` for each composable pair
/// `a: A -> A'`, `a2: A' -> A''`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoFunctor2 {
    pub name: String,
    pub src: Arc<Fin2Cat>,
    pub tgt: Arc<Fin2Cat>,
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
    pub cell_map: Vec<CellId>,
    pub compositors: BTreeMap<(MorId, MorId), CellId>,
}

impl PseudoFunctor2 {
    /// The identity pseudo-functor (strict).
    pub fn identity(a: Arc<Fin2Cat>) -> Self {
        let obj_map = (0..a.n_objects()).collect();
        let mor_map = (0..a.n_mor()).collect();
        let cell_map = (0..a.n_cells()).collect();
        let mut f = PseudoFunctor2 {
            name: format!("id_{}", a.name),
            src: a.clone(),
            tgt: a,
            obj_map,
            mor_map,
            cell_map,
            compositors: BTreeMap::new(),
        };
        f.fill_strict_compositors();
        f
    }

    /// A strict functor from explicit sort maps; compositors become identity
    /// 2-cells on the (necessarily equal) composites.
    pub fn strict(
        name: impl Into<String>,
        src: Arc<Fin2Cat>,
        tgt: Arc<Fin2Cat>,
        obj_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
        cell_map: Vec<CellId>,
    ) -> Self {
        let mut f = PseudoFunctor2 {
            name: name.into(),
            src,
            tgt,
            obj_map,
            mor_map,
            cell_map,
            compositors: BTreeMap::new(),
        };
        f.fill_strict_compositors();
        f
    }

    /// The unique functor to the terminal 2-category.
    pub fn bang(src: Arc<Fin2Cat>, term: Arc<Fin2Cat>) -> Self {
        PseudoFunctor2::strict(
            format!("!_{}", src.name),
            src.clone(),
            term,
            vec![0; src.n_objects()],
            vec![0; src.n_mor()],
            vec![0; src.n_cells()],
        )
    }

    /// The constant functor at an object of `tgt`.
    pub fn constant(src: Arc<Fin2Cat>, tgt: Arc<Fin2Cat>, at: ObjId) -> Self {
        let name = format!("const_{}", tgt.objects[at]);
        let obj_map = vec![at; src.n_objects()];
        let mor_map = vec![tgt.mor_id[at]; src.n_mor()];
        let cell_map = vec![tgt.cell_id[tgt.mor_id[at]]; src.n_cells()];
        PseudoFunctor2::strict(name, src, tgt, obj_map, mor_map, cell_map)
    }

    fn fill_strict_compositors(&mut self) {
        for a2 in 0..self.src.n_mor() {
            for a in 0..self.src.n_mor() {
                if self.src.mor_composable(a2, a) {
                    let fa2fa = self
                        .tgt
                        .compose_mor(self.mor_map[a2], self.mor_map[a])
                        .expect("strict image composes");
                    self.compositors.insert((a, a2), self.tgt.cell_id[fa2fa]);
                }
            }
        }
    }

    pub fn compositor(&self, a: MorId, a2: MorId) -> Option<CellId> {
        self.compositors.get(&(a, a2)).copied()
    }

    /// Strict means every compositor is an identity 2-cell.
    pub fn is_strict(&self) -> bool {
        self.compositors.iter().all(|(&(a, a2), &c)| {
            let comp = self.tgt.compose_mor(self.mor_map[a2], self.mor_map[a]);
            comp.map(|m| self.tgt.cell_id[m] == c).unwrap_or(false)
        })
    }

    /// `g . f` of strict functors (used for projections).
    pub fn compose_strict(g: &PseudoFunctor2, f: &PseudoFunctor2) -> PseudoFunctor2 {
        PseudoFunctor2::strict(
            format!("{}.{}", g.name, f.name),
            f.src.clone(),
            g.tgt.clone(),
            f.obj_map.iter().map(|&o| g.obj_map[o]).collect(),
            f.mor_map.iter().map(|&m| g.mor_map[m]).collect(),
            f.cell_map.iter().map(|&c| g.cell_map[c]).collect(),
        )
    }
}

/// Exhaustively check all coherence laws of a normal pseudo-functor.
pub fn validate_pseudofunctor2(f: &PseudoFunctor2) -> Result<Report> {
    let (a, b) = (&*f.src, &*f.tgt);
    if f.obj_map.len() != a.n_objects() || f.mor_map.len() != a.n_mor() || f.cell_map.len() != a.n_cells()
    {
        return Err(Error::SortMismatch(format!("map table sizes for {}", f.name)));
    }
    if f.obj_map.iter().any(|&o| o >= b.n_objects())
        || f.mor_map.iter().any(|&m| m >= b.n_mor())
        || f.cell_map.iter().any(|&c| c >= b.n_cells())
        || f.compositors.values().any(|&c| c >= b.n_cells())
    {
        return Err(Error::MalformedTable {
            structure: f.name.clone(),
            detail: "map references unknown target id".into(),
        });
    }
    let mut report = Report::new();

    for m in 0..a.n_mor() {
        let fm = f.mor_map[m];
        if b.mor_src[fm] != f.obj_map[a.mor_src[m]] || b.mor_tgt[fm] != f.obj_map[a.mor_tgt[m]] {
            report.violate("morphism boundary", vec![a.mor_label(m)]);
        }
    }
    for c in 0..a.n_cells() {
        let fc = f.cell_map[c];
        if b.cell_src[fc] != f.mor_map[a.cell_src[c]] || b.cell_tgt[fc] != f.mor_map[a.cell_tgt[c]] {
            report.violate("2-cell boundary", vec![a.cell_label(c)]);
        }
    }

    // Normality: identities on the nose.
    for o in 0..a.n_objects() {
        if f.mor_map[a.mor_id[o]] != b.mor_id[f.obj_map[o]] {
            report.violate("normality", vec![a.objects[o].clone()]);
        }
    }

    // Local functors: strict on vertical composition and identity 2-cells.
    for m in 0..a.n_mor() {
        if f.cell_map[a.cell_id[m]] != b.cell_id[f.mor_map[m]] {
            report.violate("identity 2-cell", vec![a.mor_label(m)]);
        }
    }
    for x in 0..a.n_cells() {
        for y in 0..a.n_cells() {
            if let Some(xy) = a.vcomp(x, y) {
                if b.vcomp(f.cell_map[x], f.cell_map[y]) != Some(f.cell_map[xy]) {
                    report.violate("vertical functoriality", vec![a.cell_label(x), a.cell_label(y)]);
                }
            }
        }
    }

    // Compositors: presence, boundary, invertibility, unitality.
    for a2 in 0..a.n_mor() {
        for a1 in 0..a.n_mor() {
            if !a.mor_composable(a2, a1) {
                continue;
            }
            let Some(phi) = f.compositor(a1, a2) else {
                report.violate("compositor missing", vec![a.mor_label(a1), a.mor_label(a2)]);
                continue;
            };
            let lhs = b.compose_mor(f.mor_map[a2], f.mor_map[a1]);
            let rhs = a.compose_mor(a2, a1).map(|m| f.mor_map[m]);
            if lhs != Some(b.cell_src[phi]) || rhs != Some(b.cell_tgt[phi]) {
                report.violate("compositor boundary", vec![a.mor_label(a1), a.mor_label(a2)]);
                continue;
            }
            if !b.cell_invertible(phi) {
                report.violate("compositor invertible", vec![a.mor_label(a1), a.mor_label(a2)]);
            }
            if a1 == a.mor_id[a.mor_src[a1]] || a2 == a.mor_id[a.mor_tgt[a2]] {
                let want = b.cell_id[b.cell_src[phi]];
                if phi != want {
                    report.violate("compositor unitality", vec![a.mor_label(a1), a.mor_label(a2)]);
                }
            }
        }
    }

    // Naturality of compositors in both arguments.
    for x in 0..a.n_cells() {
        for y in 0..a.n_cells() {
            if !a.hcomposable(y, x) {
                continue;
            }
            let (a1, b1) = (a.cell_src[x], a.cell_tgt[x]);
            let (a2, b2) = (a.cell_src[y], a.cell_tgt[y]);
            let (Some(p_a), Some(p_b)) = (f.compositor(a1, a2), f.compositor(b1, b2)) else {
                continue;
            };
            let lhs = b
                .hcomp(f.cell_map[y], f.cell_map[x])
                .and_then(|h| b.vcomp(p_b, h));
            let rhs = a.hcomp(y, x).and_then(|h| b.vcomp(f.cell_map[h], p_a));
            if lhs != rhs || lhs.is_none() {
                report.violate("compositor naturality", vec![a.cell_label(x), a.cell_label(y)]);
            }
        }
    }

    // Associativity of compositors.
    for a1 in 0..a.n_mor() {
        for a2 in 0..a.n_mor() {
            if !a.mor_composable(a2, a1) {
                continue;
            }
            for a3 in 0..a.n_mor() {
                if !a.mor_composable(a3, a2) {
                    continue;
                }
                let a21 = a.compose_mor(a2, a1).unwrap();
                let a32 = a.compose_mor(a3, a2).unwrap();
                let (Some(p12), Some(p123), Some(p23), Some(p1_23)) = (
                    f.compositor(a1, a2),
                    f.compositor(a21, a3),
                    f.compositor(a2, a3),
                    f.compositor(a1, a32),
                ) else {
                    continue;
                };
                let id_fa3 = b.cell_id[f.mor_map[a3]];
                let id_fa1 = b.cell_id[f.mor_map[a1]];
                let lhs = b.hcomp(id_fa3, p12).and_then(|w| b.vcomp(p123, w));
                let rhs = b.hcomp(p23, id_fa1).and_then(|w| b.vcomp(p1_23, w));
                if lhs != rhs || lhs.is_none() {
                    report.violate(
                        "compositor associativity",
                        vec![a.mor_label(a1), a.mor_label(a2), a.mor_label(a3)],
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
    use crate::fixtures;

    #[test]
    fn identity_on_cell_validates() {
        let cell = Arc::new(fixtures::cell());
        let f = PseudoFunctor2::identity(cell);
        assert!(validate_pseudofunctor2(&f).unwrap().ok());
    }

    #[test]
    fn collapse_cell_to_arr_validates() {
        let f = fixtures::collapse_cell_to_arr();
        let report = validate_pseudofunctor2(&f).unwrap();
        assert!(report.ok(), "{report}");
        assert!(f.is_strict());
    }

    #[test]
    fn out_of_range_compositor_is_malformed() {
        let mut f = fixtures::collapse_cell_to_arr();
        // ARR has only identity 2-cells; a compositor pointing past them is
        // a malformed table, not an axiom failure.
        let key = *f.compositors.keys().next().unwrap();
        f.compositors.insert(key, 99);
        assert!(matches!(validate_pseudofunctor2(&f), Err(Error::MalformedTable { .. })));
    }

    #[test]
    fn wrong_cell_map_is_violation() {
        let mut f = fixtures::collapse_cell_to_arr();
        // Send alpha to the identity 2-cell at the wrong morphism.
        let tgt_id1 = f.tgt.cell_id[f.tgt.mor_id[1]];
        f.cell_map[fixtures::CELL_ALPHA] = tgt_id1;
        let report = validate_pseudofunctor2(&f).unwrap();
        assert!(!report.ok());
    }
}
