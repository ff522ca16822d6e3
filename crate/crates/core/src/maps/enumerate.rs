//! Bounded brute-force enumeration of functors, pseudo-natural
//! transformations, and modifications.

use std::sync::Arc;

use crate::cat::{CatFunctor, FinCat, MorId};
use crate::error::{Caps, Error, Result};

use super::psnat::{Modif, PsNat};
use super::CatPsFun;

/// All functors from `x` to `y`, duplicate-free, in canonical order.
///
/// Backtracking over object maps and then morphism maps; identity morphisms
/// are forced, composition closure is checked as soon as both factors are
/// assigned. Aborts with [`Error::SizeCapExceeded`] when the raw search space
/// is larger than `caps.search`; there is no silent truncation.
pub fn enumerate_functors(x: &Arc<FinCat>, y: &Arc<FinCat>, caps: Caps) -> Result<Vec<CatFunctor>> {
    let obj_space = (y.n_objects() as u128).checked_pow(x.n_objects() as u32);
    match obj_space {
        Some(n) if n <= caps.search as u128 => {}
        _ => {
            return Err(Error::SizeCapExceeded {
                context: format!("enumerating functors {} -> {}", x.name, y.name),
                required: obj_space.map(|n| n.min(usize::MAX as u128) as usize).unwrap_or(usize::MAX),
                cap: caps.search,
            })
        }
    }
    let mut out = Vec::new();
    let mut obj_map = vec![0usize; x.n_objects()];
    loop {
        enumerate_mor_maps(x, y, &obj_map, caps, &mut out)?;
        // Odometer over object assignments.
        let mut k = x.n_objects();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            obj_map[k] += 1;
            if obj_map[k] < y.n_objects() {
                break;
            }
            obj_map[k] = 0;
        }
        if obj_map.iter().all(|&o| o == 0) {
            return Ok(out);
        }
    }
}

fn enumerate_mor_maps(
    x: &Arc<FinCat>,
    y: &Arc<FinCat>,
    obj_map: &[usize],
    caps: Caps,
    out: &mut Vec<CatFunctor>,
) -> Result<()> {
    if x.n_objects() > 0 && y.n_objects() == 0 {
        return Ok(());
    }
    let mut candidates: Vec<Vec<MorId>> = Vec::with_capacity(x.n_mor());
    let mut space: u128 = 1;
    for m in 0..x.n_mor() {
        let cand = if x.identity.contains(&m) {
            let o = x.src[m];
            vec![y.identity[obj_map[o]]]
        } else {
            y.hom(obj_map[x.src[m]], obj_map[x.tgt[m]])
        };
        space = space.saturating_mul(cand.len().max(1) as u128);
        candidates.push(cand);
    }
    if space > caps.search as u128 {
        return Err(Error::SizeCapExceeded {
            context: format!("enumerating functors {} -> {}", x.name, y.name),
            required: space.min(usize::MAX as u128) as usize,
            cap: caps.search,
        });
    }
    let mut mor_map = vec![usize::MAX; x.n_mor()];
    dfs_mor(x, y, obj_map, &candidates, &mut mor_map, 0, out);
    Ok(())
}

fn dfs_mor(
    x: &Arc<FinCat>,
    y: &Arc<FinCat>,
    obj_map: &[usize],
    candidates: &[Vec<MorId>],
    mor_map: &mut Vec<MorId>,
    at: usize,
    out: &mut Vec<CatFunctor>,
) {
    if at == x.n_mor() {
        out.push(CatFunctor {
            src: x.clone(),
            tgt: y.clone(),
            obj_map: obj_map.to_vec(),
            mor_map: mor_map.clone(),
        });
        return;
    }
    'next: for &img in &candidates[at] {
        mor_map[at] = img;
        // Composition closure: check every pair whose factors and composite
        // are all assigned by now and which involves `at`.
        for g in 0..=at {
            for f in 0..=at {
                let Some(gf) = x.compose(g, f) else { continue };
                if gf > at || g.max(f).max(gf) != at {
                    continue;
                }
                if y.compose(mor_map[g], mor_map[f]) != Some(mor_map[gf]) {
                    continue 'next;
                }
            }
        }
        dfs_mor(x, y, obj_map, candidates, mor_map, at + 1, out);
    }
    mor_map[at] = usize::MAX;
}

/// All pseudo-natural transformations `F => G`, complete, duplicate-free, and
/// canonically ordered. Pure brute force over component choices filtered by
/// the axioms.
pub fn enumerate_psnats(f: &Arc<CatPsFun>, g: &Arc<CatPsFun>, caps: Caps) -> Result<Vec<PsNat>> {
    let base = &f.base;
    if !base.tables_eq(&g.base) {
        return Err(Error::SortMismatch("presheaves are not parallel".into()));
    }
    // Component functors per object.
    let mut per_object: Vec<Vec<CatFunctor>> = Vec::new();
    let mut space: u128 = 1;
    for c in 0..base.n_objects() {
        let fs = enumerate_functors(&f.values[c], &g.values[c], caps)?;
        space = space.saturating_mul(fs.len().max(1) as u128);
        if fs.is_empty() {
            return Ok(Vec::new());
        }
        per_object.push(fs);
    }
    if space > caps.search as u128 {
        return Err(Error::SizeCapExceeded {
            context: format!("enumerating transformations {} => {}", f.name, g.name),
            required: space.min(usize::MAX as u128) as usize,
            cap: caps.search,
        });
    }

    let mut out = Vec::new();
    let mut pick = vec![0usize; base.n_objects()];
    loop {
        let components: Vec<CatFunctor> =
            pick.iter().enumerate().map(|(c, &i)| per_object[c][i].clone()).collect();
        extend_with_nat_components(f, g, &components, caps, &mut out)?;
        let mut k = base.n_objects();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < per_object[k].len() {
                break;
            }
            pick[k] = 0;
        }
        if pick.iter().all(|&i| i == 0) {
            return Ok(out);
        }
    }
}

fn extend_with_nat_components(
    f: &Arc<CatPsFun>,
    g: &Arc<CatPsFun>,
    components: &[CatFunctor],
    caps: Caps,
    out: &mut Vec<PsNat>,
) -> Result<()> {
    let base = &f.base;
    // Candidate naturality components per base morphism. Identity morphisms
    // are forced to identities; the rest range over isomorphisms with the
    // right boundary, pre-filtered by naturality in the value argument.
    let mut per_mor: Vec<Vec<Vec<MorId>>> = Vec::with_capacity(base.n_mor());
    let mut space: u128 = 1;
    for c in 0..base.n_mor() {
        let (cs, ct) = (base.mor_src[c], base.mor_tgt[c]);
        let dom = &f.values[ct];
        let gval = &g.values[cs];
        if c == base.mor_id[cs] {
            let forced: Vec<MorId> =
                (0..dom.n_objects()).map(|x| gval.identity[components[cs].obj_map[x]]).collect();
            per_mor.push(vec![forced]);
            continue;
        }
        let mut per_x: Vec<Vec<MorId>> = Vec::new();
        for x in 0..dom.n_objects() {
            let src = g.on_mor[c].obj_map[components[ct].obj_map[x]];
            let tgt = components[cs].obj_map[f.on_mor[c].obj_map[x]];
            let cands: Vec<MorId> =
                gval.hom(src, tgt).into_iter().filter(|&m| gval.is_iso(m)).collect();
            if cands.is_empty() {
                return Ok(());
            }
            per_x.push(cands);
        }
        let mut combos: Vec<Vec<MorId>> = vec![Vec::new()];
        for cands in &per_x {
            let mut next = Vec::new();
            for prefix in &combos {
                for &m in cands {
                    let mut v = prefix.clone();
                    v.push(m);
                    next.push(v);
                }
            }
            combos = next;
            if combos.len() as u128 > caps.search as u128 {
                return Err(Error::SizeCapExceeded {
                    context: format!("naturality components at {}", base.mor_label(c)),
                    required: combos.len(),
                    cap: caps.search,
                });
            }
        }
        // Filter by naturality in the value-category argument.
        let dom_mor = dom.n_mor();
        combos.retain(|nat_c| {
            (0..dom_mor).all(|m| {
                let (x, y) = (dom.src[m], dom.tgt[m]);
                let lhs = gval.compose(components[cs].mor_map[f.on_mor[c].mor_map[m]], nat_c[x]);
                let rhs = gval.compose(nat_c[y], g.on_mor[c].mor_map[components[ct].mor_map[m]]);
                lhs == rhs && lhs.is_some()
            })
        });
        if combos.is_empty() {
            return Ok(());
        }
        space = space.saturating_mul(combos.len() as u128);
        if space > caps.search as u128 {
            return Err(Error::SizeCapExceeded {
                context: "combining naturality components".into(),
                required: space.min(usize::MAX as u128) as usize,
                cap: caps.search,
            });
        }
        per_mor.push(combos);
    }

    let mut pick = vec![0usize; base.n_mor()];
    loop {
        let nat: Vec<Vec<MorId>> =
            pick.iter().enumerate().map(|(c, &i)| per_mor[c][i].clone()).collect();
        let cand = PsNat { f: f.clone(), g: g.clone(), components: components.to_vec(), nat };
        if super::validate_psnat(&cand).map(|r| r.ok()).unwrap_or(false) {
            out.push(cand);
        }
        let mut k = base.n_mor();
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < per_mor[k].len() {
                break;
            }
            pick[k] = 0;
        }
        if pick.iter().all(|&i| i == 0) {
            return Ok(());
        }
    }
}

/// All modifications between two parallel pseudo-natural transformations.
pub fn enumerate_modifications(alpha: &PsNat, beta: &PsNat, caps: Caps) -> Result<Vec<Modif>> {
    let base = &alpha.f.base;
    let mut per_object: Vec<Vec<Vec<MorId>>> = Vec::new();
    let mut space: u128 = 1;
    for c in 0..base.n_objects() {
        let dom = &alpha.f.values[c];
        let gval = &alpha.g.values[c];
        let mut combos: Vec<Vec<MorId>> = vec![Vec::new()];
        for x in 0..dom.n_objects() {
            let cands = gval.hom(alpha.components[c].obj_map[x], beta.components[c].obj_map[x]);
            if cands.is_empty() {
                return Ok(Vec::new());
            }
            let mut next = Vec::new();
            for prefix in &combos {
                for &m in &cands {
                    let mut v = prefix.clone();
                    v.push(m);
                    next.push(v);
                }
            }
            combos = next;
            if combos.len() as u128 > caps.search as u128 {
                return Err(Error::SizeCapExceeded {
                    context: "modification components".into(),
                    required: combos.len(),
                    cap: caps.search,
                });
            }
        }
        // Componentwise naturality filter.
        combos.retain(|comp| {
            (0..dom.n_mor()).all(|m| {
                let (x, y) = (dom.src[m], dom.tgt[m]);
                let lhs = gval.compose(beta.components[c].mor_map[m], comp[x]);
                let rhs = gval.compose(comp[y], alpha.components[c].mor_map[m]);
                lhs == rhs && lhs.is_some()
            })
        });
        if combos.is_empty() {
            return Ok(Vec::new());
        }
        space = space.saturating_mul(combos.len() as u128);
        if space > caps.search as u128 {
            return Err(Error::SizeCapExceeded {
                context: "combining modification components".into(),
                required: space.min(usize::MAX as u128) as usize,
                cap: caps.search,
            });
        }
        per_object.push(combos);
    }

    let alpha_arc = Arc::new(alpha.clone());
    let beta_arc = Arc::new(beta.clone());
    let mut out = Vec::new();
    let mut pick = vec![0usize; base.n_objects()];
    if base.n_objects() == 0 {
        out.push(Modif {
            alpha: alpha_arc,
            beta: beta_arc,
            components: Vec::new(),
        });
        return Ok(out);
    }
    loop {
        let components: Vec<Vec<MorId>> =
            pick.iter().enumerate().map(|(c, &i)| per_object[c][i].clone()).collect();
        let cand = Modif { alpha: alpha_arc.clone(), beta: beta_arc.clone(), components };
        if super::validate_modification(&cand).map(|r| r.ok()).unwrap_or(false) {
            out.push(cand);
        }
        let mut k = base.n_objects();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < per_object[k].len() {
                break;
            }
            pick[k] = 0;
        }
        if pick.iter().all(|&i| i == 0) {
            return Ok(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::maps::{validate_psnat, PsNat};

    #[test]
    fn functors_iso_to_iso() {
        let iso = Arc::new(fixtures::iso_cat());
        let fs = enumerate_functors(&iso, &iso, Caps::default()).unwrap();
        assert_eq!(fs.len(), 4);
        for f in &fs {
            assert!(crate::cat::validate_cat_functor(f).unwrap().ok());
        }
    }

    #[test]
    fn functors_two_to_iso() {
        let two = Arc::new(fixtures::two_cat_cat());
        let iso = Arc::new(fixtures::iso_cat());
        let fs = enumerate_functors(&two, &iso, Caps::default()).unwrap();
        assert_eq!(fs.len(), 4);
    }

    #[test]
    fn psnats_f_iso_to_f_iso() {
        let f = Arc::new(fixtures::f_iso());
        let all = enumerate_psnats(&f, &f, Caps::default()).unwrap();
        // Components are the 4 functors ISO -> ISO; naturality is vacuous
        // over the terminal base.
        assert_eq!(all.len(), 4);
        for a in &all {
            assert!(validate_psnat(a).unwrap().ok());
        }
    }

    #[test]
    fn psnats_f_arr_to_f_iso() {
        let f = Arc::new(fixtures::f_arr());
        let g = Arc::new(fixtures::f_iso());
        let all = enumerate_psnats(&f, &g, Caps::default()).unwrap();
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn modifications_on_identity() {
        let f = Arc::new(fixtures::f_iso());
        let id = PsNat::identity(f);
        let mods = enumerate_modifications(&id, &id, Caps::default()).unwrap();
        assert_eq!(mods.len(), 1);
    }

    #[test]
    fn enumeration_matches_unfiltered_generation() {
        // Cross-check: generate all raw (component, naturality) tuples and
        // filter by the validator alone; must coincide with enumerate_psnats.
        let f = Arc::new(fixtures::f_iso());
        let fast = enumerate_psnats(&f, &f, Caps::default()).unwrap();
        let comps = enumerate_functors(&f.values[0], &f.values[0], Caps::default()).unwrap();
        let mut slow = Vec::new();
        for c in comps {
            // Base is terminal: only the identity base morphism, forced.
            let nat = vec![(0..f.values[0].n_objects())
                .map(|x| f.values[0].identity[c.obj_map[x]])
                .collect()];
            let cand = PsNat { f: f.clone(), g: f.clone(), components: vec![c], nat };
            if validate_psnat(&cand).unwrap().ok() {
                slow.push(cand);
            }
        }
        assert_eq!(fast.len(), slow.len());
        for (a, b) in fast.iter().zip(&slow) {
            assert!(a.same_data(b));
        }
    }

    #[test]
    fn cap_aborts_with_structured_error() {
        let iso = Arc::new(fixtures::iso_cat());
        let tiny = Caps { per_sort: 64, search: 2 };
        assert!(matches!(
            enumerate_functors(&iso, &iso, tiny),
            Err(crate::error::Error::SizeCapExceeded { .. })
        ));
    }
}
