//! Cat-valued presheaves: normal pseudo-functors from the opposite of a
//! finite 2-category into the universe of finite categories.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cat::{validate_cat_functor, CatFunctor, FinCat, MorId};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::two_cat::{CellId, Fin2Cat};

/// A normal pseudo-functor `base^op -> Cat`, materialized per cell.
///
/// The contravariance convention is fixed once: for `c: C -> C'` in the base,
/// `on_mor[c]` is a functor `value(C') -> value(C)`; for `gamma: c => d`,
/// `on_cell[gamma][x']` is the component `(F gamma)_{x'}: (Fc)x' -> (Fd)x'`
/// in `value(C)`; and `compositor(c, c2)[x'']` is the natural isomorphism
/// component `(Fc)(Fc2)x'' -> F(c2.c)x''` for `c: C -> C'`, `c2: C' -> C''`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatPsFun {
    pub name: String,
    pub base: Arc<Fin2Cat>,
    pub values: Vec<Arc<FinCat>>,
    pub on_mor: Vec<CatFunctor>,
    pub on_cell: Vec<Vec<MorId>>,
    pub compositors: BTreeMap<(MorId, MorId), Vec<MorId>>,
}

impl CatPsFun {
    pub fn value(&self, c: usize) -> &Arc<FinCat> {
        &self.values[c]
    }

    pub fn compositor(&self, c: MorId, c2: MorId) -> Option<&Vec<MorId>> {
        self.compositors.get(&(c, c2))
    }

    /// The constant presheaf at a fixed category.
    pub fn constant(base: Arc<Fin2Cat>, value: Arc<FinCat>, name: impl Into<String>) -> Self {
        let values: Vec<_> = (0..base.n_objects()).map(|_| value.clone()).collect();
        let on_mor = (0..base.n_mor()).map(|_| CatFunctor::identity(value.clone())).collect();
        let on_cell = (0..base.n_cells())
            .map(|_| (0..value.n_objects()).map(|x| value.identity[x]).collect())
            .collect();
        let mut f = CatPsFun {
            name: name.into(),
            base,
            values,
            on_mor,
            on_cell,
            compositors: BTreeMap::new(),
        };
        f.fill_strict_compositors();
        f
    }

    /// Fill compositors with identity components; correct whenever
    /// `on_mor[c] . on_mor[c2]` literally equals `on_mor[c2.c]`.
    pub fn fill_strict_compositors(&mut self) {
        self.compositors.clear();
        for c2 in 0..self.base.n_mor() {
            for c in 0..self.base.n_mor() {
                if self.base.mor_composable(c2, c) {
                    let fc = &self.on_mor[c];
                    let fc2 = &self.on_mor[c2];
                    let target = &self.values[self.base.mor_src[c]];
                    let comps = (0..fc2.src.n_objects())
                        .map(|x2| target.identity[fc.obj_map[fc2.obj_map[x2]]])
                        .collect();
                    self.compositors.insert((c, c2), comps);
                }
            }
        }
    }

    /// Is every compositor an identity and the assignment strictly functorial?
    pub fn is_strict(&self) -> bool {
        self.compositors.iter().all(|(&(c, _c2), comps)| {
            let value = &self.values[self.base.mor_src[c]];
            comps.iter().all(|&m| value.identity.contains(&m))
        })
    }
}

/// Exhaustively check the coherence of a Cat-valued presheaf.
pub fn validate_cat_psfun(f: &CatPsFun) -> Result<Report> {
    let base = &*f.base;
    if f.values.len() != base.n_objects()
        || f.on_mor.len() != base.n_mor()
        || f.on_cell.len() != base.n_cells()
    {
        return Err(Error::SortMismatch(format!("table sizes for {}", f.name)));
    }
    let mut report = Report::new();

    // Every assigned functor has the right endpoints and is a functor.
    for c in 0..base.n_mor() {
        let fc = &f.on_mor[c];
        let want_src = &f.values[base.mor_tgt[c]];
        let want_tgt = &f.values[base.mor_src[c]];
        if !Arc::ptr_eq(&fc.src, want_src) && !fc.src.tables_eq(want_src) {
            report.violate("functor source", vec![base.mor_label(c)]);
            continue;
        }
        if !Arc::ptr_eq(&fc.tgt, want_tgt) && !fc.tgt.tables_eq(want_tgt) {
            report.violate("functor target", vec![base.mor_label(c)]);
            continue;
        }
        report.absorb(&format!("functor {}", base.mor_label(c)), validate_cat_functor(fc)?);
    }
    if !report.ok() {
        return Ok(report);
    }

    // Normality.
    for o in 0..base.n_objects() {
        if !f.on_mor[base.mor_id[o]].is_identity() {
            report.violate("normality", vec![base.objects[o].clone()]);
        }
    }

    // Natural transformations assigned to 2-cells.
    for g in 0..base.n_cells() {
        let (c, d) = (base.cell_src[g], base.cell_tgt[g]);
        let value = &f.values[base.mor_src[c]];
        let dom = &f.values[base.mor_tgt[c]];
        if f.on_cell[g].len() != dom.n_objects() {
            return Err(Error::SortMismatch(format!(
                "components of {} in {}",
                base.cell_label(g),
                f.name
            )));
        }
        for x in 0..dom.n_objects() {
            let comp = f.on_cell[g][x];
            if comp >= value.n_mor() {
                return Err(Error::MalformedTable {
                    structure: f.name.clone(),
                    detail: format!("component of {} out of range", base.cell_label(g)),
                });
            }
            if value.src[comp] != f.on_mor[c].obj_map[x] || value.tgt[comp] != f.on_mor[d].obj_map[x] {
                report.violate("component boundary", vec![base.cell_label(g), x.to_string()]);
            }
        }
        // Naturality of (F gamma).
        for m in 0..dom.n_mor() {
            let (x, y) = (dom.src[m], dom.tgt[m]);
            let lhs = value.compose(f.on_mor[d].mor_map[m], f.on_cell[g][x]);
            let rhs = value.compose(f.on_cell[g][y], f.on_mor[c].mor_map[m]);
            if lhs != rhs || lhs.is_none() {
                report.violate("component naturality", vec![base.cell_label(g), dom.mor_label(m)]);
            }
        }
    }

    // Strict functoriality on vertical composition of 2-cells.
    for c in 0..base.n_mor() {
        let idc = base.cell_id[c];
        let dom = &f.values[base.mor_tgt[c]];
        let value = &f.values[base.mor_src[c]];
        for x in 0..dom.n_objects() {
            if f.on_cell[idc][x] != value.identity[f.on_mor[c].obj_map[x]] {
                report.violate("identity 2-cell action", vec![base.mor_label(c)]);
            }
        }
    }
    for g in 0..base.n_cells() {
        for h in 0..base.n_cells() {
            if let Some(gh) = base.vcomp(g, h) {
                let c = base.cell_src[h];
                let dom = &f.values[base.mor_tgt[c]];
                let value = &f.values[base.mor_src[c]];
                for x in 0..dom.n_objects() {
                    let lhs = value.compose(f.on_cell[g][x], f.on_cell[h][x]);
                    if lhs != Some(f.on_cell[gh][x]) {
                        report.violate(
                            "vertical functoriality",
                            vec![base.cell_label(g), base.cell_label(h)],
                        );
                    }
                }
            }
        }
    }

    // Compositors: presence, boundary, isomorphism, naturality, unitality.
    for c2 in 0..base.n_mor() {
        for c in 0..base.n_mor() {
            if !base.mor_composable(c2, c) {
                continue;
            }
            let c21 = base.compose_mor(c2, c).unwrap();
            let Some(phi) = f.compositor(c, c2) else {
                report.violate("compositor missing", vec![base.mor_label(c), base.mor_label(c2)]);
                continue;
            };
            let dom = &f.values[base.mor_tgt[c2]];
            let value = &f.values[base.mor_src[c]];
            if phi.len() != dom.n_objects() {
                return Err(Error::SortMismatch(format!(
                    "compositor components for ({}, {})",
                    base.mor_label(c),
                    base.mor_label(c2)
                )));
            }
            for x2 in 0..dom.n_objects() {
                let m = phi[x2];
                if m >= value.n_mor() {
                    return Err(Error::MalformedTable {
                        structure: f.name.clone(),
                        detail: "compositor component out of range".into(),
                    });
                }
                let want_src = f.on_mor[c].obj_map[f.on_mor[c2].obj_map[x2]];
                let want_tgt = f.on_mor[c21].obj_map[x2];
                if value.src[m] != want_src || value.tgt[m] != want_tgt {
                    report.violate(
                        "compositor boundary",
                        vec![base.mor_label(c), base.mor_label(c2), x2.to_string()],
                    );
                }
                if value.inverse(m).is_none() {
                    report.violate(
                        "compositor invertible",
                        vec![base.mor_label(c), base.mor_label(c2), x2.to_string()],
                    );
                }
            }
            // Naturality in objects of the domain value category.
            for m in 0..dom.n_mor() {
                let (x, y) = (dom.src[m], dom.tgt[m]);
                let fcfc2 = f.on_mor[c].mor_map[f.on_mor[c2].mor_map[m]];
                let lhs = value.compose(f.on_mor[c21].mor_map[m], phi[x]);
                let rhs = value.compose(phi[y], fcfc2);
                if lhs != rhs || lhs.is_none() {
                    report.violate(
                        "compositor component naturality",
                        vec![base.mor_label(c), base.mor_label(c2), dom.mor_label(m)],
                    );
                }
            }
            // Unitality (normal pseudo-functor).
            if c == base.mor_id[base.mor_src[c]] || c2 == base.mor_id[base.mor_tgt[c2]] {
                for x2 in 0..dom.n_objects() {
                    if !value.identity.contains(&phi[x2]) {
                        report.violate(
                            "compositor unitality",
                            vec![base.mor_label(c), base.mor_label(c2)],
                        );
                    }
                }
            }
        }
    }

    // Compositors are natural in both base arguments (with respect to 2-cells).
    for g in 0..base.n_cells() {
        for g2 in 0..base.n_cells() {
            if !base.hcomposable(g2, g) {
                continue;
            }
            let (c, d) = (base.cell_src[g], base.cell_tgt[g]);
            let (c2, d2) = (base.cell_src[g2], base.cell_tgt[g2]);
            let g21 = base.hcomp(g2, g).unwrap();
            let (Some(p_c), Some(p_d)) = (f.compositor(c, c2), f.compositor(d, d2)) else {
                continue;
            };
            let dom = &f.values[base.mor_tgt[c2]];
            let value = &f.values[base.mor_src[c]];
            for x2 in 0..dom.n_objects() {
                // Godement product of (F g) and (F g2) at x2.
                let via = f.on_mor[d2].obj_map[x2];
                let god = value.compose(f.on_cell[g][via], f.on_mor[c].mor_map[f.on_cell[g2][x2]]);
                let lhs = god.and_then(|w| value.compose(p_d[x2], w));
                let rhs = value.compose(f.on_cell[g21][x2], p_c[x2]);
                if lhs != rhs || lhs.is_none() {
                    report.violate(
                        "compositor 2-naturality",
                        vec![base.cell_label(g), base.cell_label(g2), x2.to_string()],
                    );
                }
            }
        }
    }

    // Associativity of compositors.
    for c in 0..base.n_mor() {
        for c2 in 0..base.n_mor() {
            if !base.mor_composable(c2, c) {
                continue;
            }
            for c3 in 0..base.n_mor() {
                if !base.mor_composable(c3, c2) {
                    continue;
                }
                let c21 = base.compose_mor(c2, c).unwrap();
                let c32 = base.compose_mor(c3, c2).unwrap();
                let (Some(p12), Some(p123), Some(p23), Some(p1_23)) = (
                    f.compositor(c, c2),
                    f.compositor(c21, c3),
                    f.compositor(c2, c3),
                    f.compositor(c, c32),
                ) else {
                    continue;
                };
                let dom = &f.values[base.mor_tgt[c3]];
                let value = &f.values[base.mor_src[c]];
                for x3 in 0..dom.n_objects() {
                    let lhs = value.compose(p123[x3], p12[f.on_mor[c3].obj_map[x3]]);
                    let rhs = value.compose(p1_23[x3], f.on_mor[c].mor_map[p23[x3]]);
                    if lhs != rhs || lhs.is_none() {
                        report.violate(
                            "compositor associativity",
                            vec![base.mor_label(c), base.mor_label(c2), base.mor_label(c3)],
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
    use crate::fixtures;

    #[test]
    fn constant_presheaves_validate() {
        for f in [fixtures::f_iso(), fixtures::f_arr(), fixtures::f_term()] {
            let report = validate_cat_psfun(&f).unwrap();
            assert!(report.ok(), "{}: {report}", f.name);
        }
    }

    #[test]
    fn non_functorial_table_is_violation() {
        // A presheaf over ARR^op whose action on the arrow breaks the functor law.
        let mut f = fixtures::presheaf_over_arr();
        let m = 2; // the non-identity morphism of ARR
        f.on_mor[m].mor_map[2] = f.on_mor[m].tgt.identity[0];
        let report = validate_cat_psfun(&f).unwrap();
        assert!(!report.ok());
        assert!(report.violations.iter().any(|v| v.axiom.contains("functor")));
    }
}
