//! Pseudo-natural transformations between Cat-valued presheaves, and
//! modifications between those.

use std::sync::Arc;

use crate::cat::{validate_cat_functor, CatFunctor, MorId};
use crate::error::{Error, Result};
use crate::report::Report;

use super::CatPsFun;

/// A pseudo-natural transformation `alpha: F => G` between parallel
/// Cat-valued presheaves.
///
/// `components[C]` is the functor `alpha_C: F(C) -> G(C)`; for a base
/// morphism `c: C -> C'`, `nat[c][x']` is the invertible naturality component
/// `(Gc)(alpha_{C'} x') -> alpha_C((Fc) x')` in `G(C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsNat {
    pub f: Arc<CatPsFun>,
    pub g: Arc<CatPsFun>,
    pub components: Vec<CatFunctor>,
    pub nat: Vec<Vec<MorId>>,
}

impl PsNat {
    pub fn identity(f: Arc<CatPsFun>) -> Self {
        let components =
            (0..f.base.n_objects()).map(|c| CatFunctor::identity(f.values[c].clone())).collect();
        let nat = (0..f.base.n_mor())
            .map(|c| {
                let dom = &f.values[f.base.mor_tgt[c]];
                let value = &f.values[f.base.mor_src[c]];
                (0..dom.n_objects()).map(|x| value.identity[f.on_mor[c].obj_map[x]]).collect()
            })
            .collect();
        PsNat { g: f.clone(), f, components, nat }
    }

    /// Data-level equality, ignoring which `Arc`s the endpoints live behind.
    pub fn same_data(&self, other: &PsNat) -> bool {
        self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.obj_map == b.obj_map && a.mor_map == b.mor_map)
            && self.nat == other.nat
    }
}

/// Exhaustively check pseudo-naturality.
pub fn validate_psnat(alpha: &PsNat) -> Result<Report> {
    let (f, g) = (&*alpha.f, &*alpha.g);
    let base = &*f.base;
    if !Arc::ptr_eq(&f.base, &g.base) && !f.base.tables_eq(&g.base) {
        return Err(Error::SortMismatch("transformation endpoints have different bases".into()));
    }
    if alpha.components.len() != base.n_objects() || alpha.nat.len() != base.n_mor() {
        return Err(Error::SortMismatch("transformation table sizes".into()));
    }
    let mut report = Report::new();

    for c in 0..base.n_objects() {
        let comp = &alpha.components[c];
        if !comp.src.tables_eq(&f.values[c]) || !comp.tgt.tables_eq(&g.values[c]) {
            report.violate("component endpoints", vec![base.objects[c].clone()]);
            continue;
        }
        report.absorb(&format!("component {}", base.objects[c]), validate_cat_functor(comp)?);
    }
    if !report.ok() {
        return Ok(report);
    }

    for c in 0..base.n_mor() {
        let (cs, ct) = (base.mor_src[c], base.mor_tgt[c]);
        let dom = &f.values[ct];
        let gval = &g.values[cs];
        if alpha.nat[c].len() != dom.n_objects() {
            return Err(Error::SortMismatch(format!(
                "naturality components at {}",
                base.mor_label(c)
            )));
        }
        for x in 0..dom.n_objects() {
            let m = alpha.nat[c][x];
            if m >= gval.n_mor() {
                return Err(Error::UnknownId { sort: "naturality component", id: m, size: gval.n_mor() });
            }
            let want_src = g.on_mor[c].obj_map[alpha.components[ct].obj_map[x]];
            let want_tgt = alpha.components[cs].obj_map[f.on_mor[c].obj_map[x]];
            if gval.src[m] != want_src || gval.tgt[m] != want_tgt {
                report.violate("naturality boundary", vec![base.mor_label(c), x.to_string()]);
            }
            if gval.inverse(m).is_none() {
                report.violate("naturality invertible", vec![base.mor_label(c), x.to_string()]);
            }
        }
        // Identity components on identity morphisms (normal endpoints).
        if c == base.mor_id[cs] {
            for x in 0..dom.n_objects() {
                if !gval.identity.contains(&alpha.nat[c][x]) {
                    report.violate("identity component", vec![base.mor_label(c)]);
                }
            }
        }
        // The square at `c` is natural in its value-category argument.
        for m in 0..dom.n_mor() {
            let (x, y) = (dom.src[m], dom.tgt[m]);
            let lhs = gval.compose(alpha.components[cs].mor_map[f.on_mor[c].mor_map[m]], alpha.nat[c][x]);
            let rhs = gval.compose(alpha.nat[c][y], g.on_mor[c].mor_map[alpha.components[ct].mor_map[m]]);
            if lhs != rhs || lhs.is_none() {
                report.violate("naturality square", vec![base.mor_label(c), dom.mor_label(m)]);
            }
        }
    }
    if !report.ok() {
        return Ok(report);
    }

    // Naturality with respect to base 2-cells.
    for gam in 0..base.n_cells() {
        let (c, d) = (base.cell_src[gam], base.cell_tgt[gam]);
        let (cs, ct) = (base.mor_src[c], base.mor_tgt[c]);
        let dom = &f.values[ct];
        let gval = &g.values[cs];
        for x in 0..dom.n_objects() {
            let lhs = gval.compose(alpha.components[cs].mor_map[f.on_cell[gam][x]], alpha.nat[c][x]);
            let rhs = gval.compose(alpha.nat[d][x], g.on_cell[gam][alpha.components[ct].obj_map[x]]);
            if lhs != rhs || lhs.is_none() {
                report.violate("2-cell naturality", vec![base.cell_label(gam), x.to_string()]);
            }
        }
    }

    // Compatibility with compositors.
    for c2 in 0..base.n_mor() {
        for c in 0..base.n_mor() {
            if !base.mor_composable(c2, c) {
                continue;
            }
            let c21 = base.compose_mor(c2, c).unwrap();
            let (cs, ct) = (base.mor_src[c], base.mor_tgt[c2]);
            let dom = &f.values[ct];
            let gval = &g.values[cs];
            let (Some(phi_f), Some(phi_g)) = (f.compositor(c, c2), g.compositor(c, c2)) else {
                continue;
            };
            for x2 in 0..dom.n_objects() {
                // Route 1: (Gc)(alpha_{c2, x2}); alpha_{c, (Fc2)x2}; alpha_C(phi^F).
                let r1 = g.on_mor[c].mor_map[alpha.nat[c2][x2]];
                let r2 = alpha.nat[c][f.on_mor[c2].obj_map[x2]];
                let r3 = alpha.components[cs].mor_map[phi_f[x2]];
                let lhs = gval.compose(r2, r1).and_then(|w| gval.compose(r3, w));
                // Route 2: phi^G at alpha_{C''}(x2); alpha_{c2.c, x2}.
                let s1 = phi_g[alpha.components[ct].obj_map[x2]];
                let rhs = gval.compose(alpha.nat[c21][x2], s1);
                if lhs != rhs || lhs.is_none() {
                    report.violate(
                        "compositor compatibility",
                        vec![base.mor_label(c), base.mor_label(c2), x2.to_string()],
                    );
                }
            }
        }
    }

    Ok(report)
}

/// `g . f` of pseudo-natural transformations.
pub fn compose_psnat(beta: &PsNat, alpha: &PsNat) -> PsNat {
    let base = &alpha.f.base;
    let components: Vec<CatFunctor> = alpha
        .components
        .iter()
        .zip(&beta.components)
        .map(|(a, b)| CatFunctor::compose(b, a))
        .collect();
    let nat = (0..base.n_mor())
        .map(|c| {
            let (cs, ct) = (base.mor_src[c], base.mor_tgt[c]);
            let dom = &alpha.f.values[ct];
            let hval = &beta.g.values[cs];
            (0..dom.n_objects())
                .map(|x| {
                    let first = beta.nat[c][alpha.components[ct].obj_map[x]];
                    let second = beta.components[cs].mor_map[alpha.nat[c][x]];
                    hval.compose(second, first).expect("composite naturality component")
                })
                .collect()
        })
        .collect();
    PsNat { f: alpha.f.clone(), g: beta.g.clone(), components, nat }
}

/// A modification between parallel pseudo-natural transformations:
/// `components[C][x]` is the morphism `alpha_C(x) -> beta_C(x)` in `G(C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modif {
    pub alpha: Arc<PsNat>,
    pub beta: Arc<PsNat>,
    pub components: Vec<Vec<MorId>>,
}

impl Modif {
    pub fn identity(alpha: Arc<PsNat>) -> Self {
        let base = &alpha.f.base;
        let components = (0..base.n_objects())
            .map(|c| {
                let dom = &alpha.f.values[c];
                let gval = &alpha.g.values[c];
                (0..dom.n_objects()).map(|x| gval.identity[alpha.components[c].obj_map[x]]).collect()
            })
            .collect();
        Modif { beta: alpha.clone(), alpha, components }
    }
}

/// Exhaustively check the modification axiom.
pub fn validate_modification(m: &Modif) -> Result<Report> {
    let (alpha, beta) = (&*m.alpha, &*m.beta);
    let base = &alpha.f.base;
    if !alpha.f.base.tables_eq(&beta.f.base) {
        return Err(Error::SortMismatch("modification endpoints have different bases".into()));
    }
    if m.components.len() != base.n_objects() {
        return Err(Error::SortMismatch("modification table size".into()));
    }
    let mut report = Report::new();
    for c in 0..base.n_objects() {
        let dom = &alpha.f.values[c];
        let gval = &alpha.g.values[c];
        if m.components[c].len() != dom.n_objects() {
            return Err(Error::SortMismatch("modification component count".into()));
        }
        for x in 0..dom.n_objects() {
            let w = m.components[c][x];
            if w >= gval.n_mor() {
                return Err(Error::UnknownId { sort: "modification component", id: w, size: gval.n_mor() });
            }
            if gval.src[w] != alpha.components[c].obj_map[x] || gval.tgt[w] != beta.components[c].obj_map[x]
            {
                report.violate("component boundary", vec![base.objects[c].clone(), x.to_string()]);
            }
        }
        // Naturality of each component family in x.
        for mo in 0..dom.n_mor() {
            let (x, y) = (dom.src[mo], dom.tgt[mo]);
            let lhs = gval.compose(beta.components[c].mor_map[mo], m.components[c][x]);
            let rhs = gval.compose(m.components[c][y], alpha.components[c].mor_map[mo]);
            if lhs != rhs || lhs.is_none() {
                report.violate("component naturality", vec![base.objects[c].clone(), dom.mor_label(mo)]);
            }
        }
    }
    if !report.ok() {
        return Ok(report);
    }

    // Compatibility with the naturality components of alpha and beta.
    for c in 0..base.n_mor() {
        let (cs, ct) = (base.mor_src[c], base.mor_tgt[c]);
        let dom = &alpha.f.values[ct];
        let gval = &alpha.g.values[cs];
        for x in 0..dom.n_objects() {
            let lhs = gval.compose(
                beta.nat[c][x],
                alpha.g.on_mor[c].mor_map[m.components[ct][x]],
            );
            let rhs = gval.compose(
                m.components[cs][alpha.f.on_mor[c].obj_map[x]],
                alpha.nat[c][x],
            );
            if lhs != rhs || lhs.is_none() {
                report.violate("modification compatibility", vec![base.mor_label(c), x.to_string()]);
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
    fn identity_psnat_validates() {
        let f = Arc::new(fixtures::f_iso());
        let id = PsNat::identity(f);
        assert!(validate_psnat(&id).unwrap().ok());
    }

    #[test]
    fn identity_modification_validates() {
        let f = Arc::new(fixtures::f_iso());
        let id = Arc::new(PsNat::identity(f));
        let m = Modif::identity(id);
        assert!(validate_modification(&m).unwrap().ok());
    }

    #[test]
    fn composition_of_validated_psnats_validates() {
        let f = Arc::new(fixtures::f_iso());
        let all = crate::maps::enumerate_psnats(&f, &f, crate::error::Caps::default()).unwrap();
        for a in &all {
            for b in &all {
                let c = compose_psnat(b, a);
                assert!(validate_psnat(&c).unwrap().ok());
            }
        }
    }
}
